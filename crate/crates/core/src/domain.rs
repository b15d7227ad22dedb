//! Core value types shared by every other module.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::num::Real;

#[derive(Debug, Error, PartialEq)]
pub enum DomainError {
    #[error("invalid bounds: lower {lower} must be strictly below upper {upper}")]
    InvalidBounds { lower: String, upper: String },
    #[error("gene {index} = {value} lies outside bounds [{lower}, {upper}]")]
    GeneOutOfBounds {
        index: usize,
        value: String,
        lower: String,
        upper: String,
    },
    #[error("sample set {label:?} needs at least 2 values, got {len}")]
    SampleTooSmall { label: String, len: usize },
    #[error("sample set {label:?} contains a non-positive value {value}")]
    NonPositiveSample { label: String, value: String },
}

/// Closed search interval applied to every gene.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds<T> {
    pub lower: T,
    pub upper: T,
}

impl<T: Real> Bounds<T> {
    pub fn new(lower: T, upper: T) -> Result<Self, DomainError> {
        if lower < upper {
            Ok(Self { lower, upper })
        } else {
            Err(DomainError::InvalidBounds {
                lower: lower.to_string(),
                upper: upper.to_string(),
            })
        }
    }

    pub fn contains(&self, gene: T) -> bool {
        self.lower <= gene && gene <= self.upper
    }

    pub fn clamp(&self, gene: T) -> T {
        if gene < self.lower {
            self.lower
        } else if gene > self.upper {
            self.upper
        } else {
            gene
        }
    }

    pub fn width(&self) -> T {
        self.upper - self.lower
    }
}

impl<T: Real> Default for Bounds<T> {
    fn default() -> Self {
        Self {
            lower: T::of(-100.0),
            upper: T::of(100.0),
        }
    }
}

/// An evaluated chromosome: genes plus the objective value they cost to learn.
///
/// `raw` is the objective value (minimized) and `fitness` its maximized
/// transform; both are always set, an unevaluated individual does not exist.
#[derive(Clone, Debug, PartialEq)]
pub struct Individual<T> {
    pub genes: Vec<T>,
    pub raw: T,
    pub fitness: T,
}

impl<T: Real> Individual<T> {
    /// Construct with a bounds check. Out-of-bounds genes are rejected,
    /// never clamped; clamping is an explicit operator-level action.
    pub fn new(genes: Vec<T>, raw: T, fitness: T, bounds: &Bounds<T>) -> Result<Self, DomainError> {
        for (index, &gene) in genes.iter().enumerate() {
            if !bounds.contains(gene) {
                return Err(DomainError::GeneOutOfBounds {
                    index,
                    value: gene.to_string(),
                    lower: bounds.lower.to_string(),
                    upper: bounds.upper.to_string(),
                });
            }
        }
        Ok(Self {
            genes,
            raw,
            fitness,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Population<T> {
    pub members: Vec<Individual<T>>,
}

impl<T: Real> Population<T> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the highest-fitness member, ties broken by lowest index.
    pub fn best_index(&self) -> usize {
        assert!(!self.members.is_empty());
        let mut best = 0;
        for (i, member) in self.members.iter().enumerate().skip(1) {
            if member.fitness > self.members[best].fitness {
                best = i;
            }
        }
        best
    }

    /// Index of the lowest-fitness member, ties broken by lowest index.
    pub fn worst_index(&self) -> usize {
        assert!(!self.members.is_empty());
        let mut worst = 0;
        for (i, member) in self.members.iter().enumerate().skip(1) {
            if member.fitness < self.members[worst].fitness {
                worst = i;
            }
        }
        worst
    }

    pub fn best(&self) -> &Individual<T> {
        &self.members[self.best_index()]
    }
}

/// The four population-update strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Gga,
    Ssga,
    Sgga,
    MuPlusMu,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Gga,
        Variant::Ssga,
        Variant::Sgga,
        Variant::MuPlusMu,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Variant::Gga => "GGA",
            Variant::Ssga => "SSGA",
            Variant::Sgga => "SGGA",
            Variant::MuPlusMu => "MU_PLUS_MU",
        }
    }

    pub fn parse(token: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.token() == token)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// The three recombination operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Crossover {
    Spx,
    Mpx,
    Blx,
}

impl Crossover {
    pub const ALL: [Crossover; 3] = [Crossover::Spx, Crossover::Mpx, Crossover::Blx];

    pub fn token(self) -> &'static str {
        match self {
            Crossover::Spx => "SPX",
            Crossover::Mpx => "MPX",
            Crossover::Blx => "BLX",
        }
    }

    pub fn parse(token: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.token() == token)
    }
}

impl fmt::Display for Crossover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Full configuration of one GA run.
#[derive(Clone, Debug, PartialEq)]
pub struct GaConfig<T> {
    pub variant: Variant,
    pub crossover: Crossover,
    pub population_size: usize,
    pub chromosome_length: usize,
    /// Per-gene probability of applying a Gaussian perturbation.
    pub mutation_rate: T,
    /// Standard deviation of the perturbation, in problem units.
    pub mutation_sigma: T,
    pub blx_alpha: T,
    pub mpx_probability: T,
    pub bounds: Bounds<T>,
    pub max_evaluations: u64,
    /// A run succeeds once an evaluation lands strictly below this raw value.
    pub success_threshold: T,
    pub seed: u64,
}

impl<T: Real> GaConfig<T> {
    pub fn new(variant: Variant, crossover: Crossover) -> Self {
        let bounds = Bounds::default();
        Self {
            variant,
            crossover,
            population_size: 16,
            chromosome_length: 2,
            mutation_rate: T::of(0.012),
            mutation_sigma: T::of(0.1) * bounds.width(),
            blx_alpha: T::zero(),
            mpx_probability: T::one(),
            bounds,
            max_evaluations: 4000,
            success_threshold: T::of(1e-5),
            seed: 0,
        }
    }
}

impl<T: Real> Default for GaConfig<T> {
    fn default() -> Self {
        Self::new(Variant::Gga, Crossover::Spx)
    }
}

/// One configuration-level invariant violation, human readable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub field: String,
    pub message: String,
}

impl Violation {
    fn new(field: &str, message: impl Into<String>) -> Self {
        Self {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

/// Collect every invariant violation; an empty list means the config is usable.
pub fn validate_config<T: Real>(config: &GaConfig<T>) -> Vec<Violation> {
    let mut violations = Vec::new();
    if config.population_size < 2 {
        violations.push(Violation::new(
            "population_size",
            format!("must be at least 2, got {}", config.population_size),
        ));
    }
    if config.chromosome_length < 1 {
        violations.push(Violation::new("chromosome_length", "must be at least 1"));
    } else if config.chromosome_length != 2 {
        violations.push(Violation::new(
            "chromosome_length",
            format!(
                "must be 2 for the two-dimensional Schaffer F6 objective, got {}",
                config.chromosome_length
            ),
        ));
    }
    if config.mutation_rate < T::zero() || config.mutation_rate > T::one() {
        violations.push(Violation::new(
            "mutation_rate",
            format!("must lie in [0, 1], got {}", config.mutation_rate),
        ));
    }
    if config.mutation_sigma.partial_cmp(&T::zero()) != Some(Ordering::Greater) {
        violations.push(Violation::new(
            "mutation_sigma",
            format!("must be positive, got {}", config.mutation_sigma),
        ));
    }
    if config.blx_alpha < T::zero() {
        violations.push(Violation::new(
            "blx_alpha",
            format!("must be non-negative, got {}", config.blx_alpha),
        ));
    }
    if config.mpx_probability < T::zero() || config.mpx_probability > T::one() {
        violations.push(Violation::new(
            "mpx_probability",
            format!("must lie in [0, 1], got {}", config.mpx_probability),
        ));
    }
    if config.bounds.lower.partial_cmp(&config.bounds.upper) != Some(Ordering::Less) {
        violations.push(Violation::new(
            "bounds",
            format!(
                "lower {} must be strictly below upper {}",
                config.bounds.lower, config.bounds.upper
            ),
        ));
    }
    if config.max_evaluations < config.population_size as u64 {
        violations.push(Violation::new(
            "max_evaluations",
            format!(
                "must cover the initial population: {} < population_size {}",
                config.max_evaluations, config.population_size
            ),
        ));
    }
    if config.success_threshold.partial_cmp(&T::zero()) != Some(Ordering::Greater) {
        violations.push(Violation::new(
            "success_threshold",
            format!("must be positive, got {}", config.success_threshold),
        ));
    }
    violations
}

/// Outcome of one seeded run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord<T> {
    pub config_id: String,
    pub run_index: u32,
    pub seed: u64,
    pub evaluations_used: u64,
    pub success: bool,
    pub best_raw: T,
    pub best_genes: Vec<T>,
}

/// A labeled vector of per-run evaluation counts for one (variant, crossover) pair.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSet<T> {
    pub label: String,
    pub values: Vec<T>,
}

impl<T: Real> SampleSet<T> {
    pub fn new(label: impl Into<String>, values: Vec<T>) -> Result<Self, DomainError> {
        let label = label.into();
        if values.len() < 2 {
            return Err(DomainError::SampleTooSmall {
                label,
                len: values.len(),
            });
        }
        if let Some(&bad) = values
            .iter()
            .find(|v| (**v).partial_cmp(&T::zero()) != Some(Ordering::Greater))
        {
            return Err(DomainError::NonPositiveSample {
                label,
                value: bad.to_string(),
            });
        }
        Ok(Self { label, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
