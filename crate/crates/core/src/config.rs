//! The flat key/value config format: UTF-8 text, `key = value` lines, `#`
//! comments, one GA config per `[section]` header. A `[batch]` section sets
//! batch-level keys and `[stats]` the analysis options; every other section
//! defines one config whose id is the section name.
//!
//! Floats are written with `Display` (shortest round-trip form), so a config
//! survives serialize/parse bit-exactly.

use std::fmt::Write as _;

use thiserror::Error;

use crate::domain::{Crossover, GaConfig, Variant, Violation};
use crate::num::Real;

pub const BATCH_SECTION: &str = "batch";
pub const STATS_SECTION: &str = "stats";

const GA_KEYS: &[&str] = &[
    "variant",
    "crossover",
    "population_size",
    "chromosome_length",
    "mutation_rate",
    "mutation_sigma",
    "blx_alpha",
    "mpx_probability",
    "lower_bound",
    "upper_bound",
    "max_evaluations",
    "success_threshold",
    "seed",
];
const BATCH_KEYS: &[&str] = &["runs_per_config", "master_seed"];
const STATS_KEYS: &[&str] = &[
    "alpha",
    "t_threshold",
    "conventional_f_mapping",
    "one_tailed",
];

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("section [{section}], key {key}: {message}")]
    Value {
        section: String,
        key: String,
        message: String,
    },
    #[error("override {0:?} must have the form key=value or section.key=value")]
    BadOverride(String),
    #[error("override key {0:?} is not a known config, batch, or stats key")]
    UnknownOverrideKey(String),
    #[error("config file defines no run sections")]
    NoConfigs,
}

/// Parsed config text: ordered sections of ordered key/value pairs.
/// Keys may repeat; the last occurrence wins when materialized.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConfigDoc {
    pub sections: Vec<(String, Vec<(String, String)>)>,
}

impl ConfigDoc {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut doc = ConfigDoc::default();
        for (index, raw_line) in text.lines().enumerate() {
            let line = index + 1;
            let content = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            }
            .trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[') {
                let name = name.strip_suffix(']').ok_or_else(|| ConfigError::Parse {
                    line,
                    message: "unterminated section header".into(),
                })?;
                let name = name.trim();
                if name.is_empty() {
                    return Err(ConfigError::Parse {
                        line,
                        message: "empty section name".into(),
                    });
                }
                doc.sections.push((name.to_string(), Vec::new()));
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::Parse {
                line,
                message: format!("expected key = value, got {content:?}"),
            })?;
            let section = doc.sections.last_mut().ok_or_else(|| ConfigError::Parse {
                line,
                message: "key/value pair before any [section] header".into(),
            })?;
            section
                .1
                .push((key.trim().to_string(), value.trim().to_string()));
        }
        Ok(doc)
    }

    fn section_mut(&mut self, name: &str) -> &mut Vec<(String, String)> {
        if let Some(pos) = self.sections.iter().position(|(n, _)| n == name) {
            return &mut self.sections[pos].1;
        }
        self.sections.push((name.to_string(), Vec::new()));
        &mut self.sections.last_mut().unwrap().1
    }

    /// Apply one `--override` argument. Dotted keys (`section.key=value`)
    /// target one section; a bare batch or stats key targets its section; a
    /// bare GA key is appended to every config section. Later overrides win
    /// because materialization takes the last occurrence of a key.
    pub fn apply_override(&mut self, spec: &str) -> Result<(), ConfigError> {
        let (key, value) = spec
            .split_once('=')
            .ok_or_else(|| ConfigError::BadOverride(spec.to_string()))?;
        let key = key.trim();
        let value = value.trim().to_string();
        if key.is_empty() {
            return Err(ConfigError::BadOverride(spec.to_string()));
        }
        if let Some((section, field)) = key.split_once('.') {
            self.section_mut(section).push((field.to_string(), value));
            return Ok(());
        }
        if BATCH_KEYS.contains(&key) {
            self.section_mut(BATCH_SECTION)
                .push((key.to_string(), value));
        } else if STATS_KEYS.contains(&key) {
            self.section_mut(STATS_SECTION)
                .push((key.to_string(), value));
        } else if GA_KEYS.contains(&key) {
            let config_sections: Vec<String> = self
                .sections
                .iter()
                .map(|(name, _)| name.clone())
                .filter(|name| name != BATCH_SECTION && name != STATS_SECTION)
                .collect();
            if config_sections.is_empty() {
                return Err(ConfigError::NoConfigs);
            }
            for name in config_sections {
                self.section_mut(&name)
                    .push((key.to_string(), value.clone()));
            }
        } else {
            return Err(ConfigError::UnknownOverrideKey(key.to_string()));
        }
        Ok(())
    }
}

fn last_value<'a>(entries: &'a [(String, String)], key: &str) -> Option<&'a str> {
    entries
        .iter()
        .rev()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
}

fn parse_value<T, F>(
    section: &str,
    entries: &[(String, String)],
    key: &str,
    parse: F,
) -> Result<Option<T>, ConfigError>
where
    F: FnOnce(&str) -> Result<T, String>,
{
    match last_value(entries, key) {
        None => Ok(None),
        Some(raw) => parse(raw).map(Some).map_err(|message| ConfigError::Value {
            section: section.to_string(),
            key: key.to_string(),
            message,
        }),
    }
}

fn parse_real<T: Real>(raw: &str) -> Result<T, String> {
    raw.parse::<T>().map_err(|e| format!("{e}: {raw:?}"))
}

fn parse_int<I: std::str::FromStr<Err = std::num::ParseIntError>>(raw: &str) -> Result<I, String> {
    raw.parse::<I>().map_err(|e| format!("{e}: {raw:?}"))
}

fn parse_bool(raw: &str) -> Result<bool, String> {
    match raw {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(format!("expected true or false, got {other:?}")),
    }
}

/// Materialize one GA config from a section, applying defaults for absent
/// keys. `mutation_sigma` defaults to a tenth of the final bounds width.
pub fn ga_config_from_entries<T: Real>(
    section: &str,
    entries: &[(String, String)],
) -> Result<GaConfig<T>, ConfigError> {
    for (key, _) in entries {
        if !GA_KEYS.contains(&key.as_str()) {
            return Err(ConfigError::Value {
                section: section.to_string(),
                key: key.clone(),
                message: "unknown key".into(),
            });
        }
    }
    let mut config = GaConfig::<T>::default();
    if let Some(variant) = parse_value(section, entries, "variant", |raw| {
        Variant::parse(raw).ok_or_else(|| format!("unknown variant {raw:?}"))
    })? {
        config.variant = variant;
    }
    if let Some(crossover) = parse_value(section, entries, "crossover", |raw| {
        Crossover::parse(raw).ok_or_else(|| format!("unknown crossover {raw:?}"))
    })? {
        config.crossover = crossover;
    }
    if let Some(v) = parse_value(section, entries, "population_size", parse_int::<usize>)? {
        config.population_size = v;
    }
    if let Some(v) = parse_value(section, entries, "chromosome_length", parse_int::<usize>)? {
        config.chromosome_length = v;
    }
    if let Some(v) = parse_value(section, entries, "mutation_rate", parse_real::<T>)? {
        config.mutation_rate = v;
    }
    if let Some(v) = parse_value(section, entries, "blx_alpha", parse_real::<T>)? {
        config.blx_alpha = v;
    }
    if let Some(v) = parse_value(section, entries, "mpx_probability", parse_real::<T>)? {
        config.mpx_probability = v;
    }
    if let Some(v) = parse_value(section, entries, "lower_bound", parse_real::<T>)? {
        config.bounds.lower = v;
    }
    if let Some(v) = parse_value(section, entries, "upper_bound", parse_real::<T>)? {
        config.bounds.upper = v;
    }
    if let Some(v) = parse_value(section, entries, "max_evaluations", parse_int::<u64>)? {
        config.max_evaluations = v;
    }
    if let Some(v) = parse_value(section, entries, "success_threshold", parse_real::<T>)? {
        config.success_threshold = v;
    }
    if let Some(v) = parse_value(section, entries, "seed", parse_int::<u64>)? {
        config.seed = v;
    }
    match parse_value(section, entries, "mutation_sigma", parse_real::<T>)? {
        Some(v) => config.mutation_sigma = v,
        None => config.mutation_sigma = T::of(0.1) * config.bounds.width(),
    }
    Ok(config)
}

/// Serialize one GA config as a section body, every field explicit.
pub fn ga_config_to_section<T: Real>(id: &str, config: &GaConfig<T>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[{id}]");
    let _ = writeln!(out, "variant = {}", config.variant);
    let _ = writeln!(out, "crossover = {}", config.crossover);
    let _ = writeln!(out, "population_size = {}", config.population_size);
    let _ = writeln!(out, "chromosome_length = {}", config.chromosome_length);
    let _ = writeln!(out, "mutation_rate = {}", config.mutation_rate);
    let _ = writeln!(out, "mutation_sigma = {}", config.mutation_sigma);
    let _ = writeln!(out, "blx_alpha = {}", config.blx_alpha);
    let _ = writeln!(out, "mpx_probability = {}", config.mpx_probability);
    let _ = writeln!(out, "lower_bound = {}", config.bounds.lower);
    let _ = writeln!(out, "upper_bound = {}", config.bounds.upper);
    let _ = writeln!(out, "max_evaluations = {}", config.max_evaluations);
    let _ = writeln!(out, "success_threshold = {}", config.success_threshold);
    let _ = writeln!(out, "seed = {}", config.seed);
    out
}

/// Analysis options shared by the stats pipeline.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatsOptions<T> {
    pub alpha: T,
    pub t_threshold: T,
    /// `false` mirrors the reference procedure: F above its critical value
    /// selects the equal-variance t-test. `true` restores the textbook
    /// mapping (unequal variances select Welch).
    pub conventional_f_mapping: bool,
    pub one_tailed: bool,
}

impl<T: Real> Default for StatsOptions<T> {
    fn default() -> Self {
        Self {
            alpha: T::of(0.05),
            t_threshold: T::of(crate::stats::DEFAULT_T_THRESHOLD),
            conventional_f_mapping: false,
            one_tailed: false,
        }
    }
}

pub fn stats_options_from_doc<T: Real>(doc: &ConfigDoc) -> Result<StatsOptions<T>, ConfigError> {
    let mut options = StatsOptions::default();
    let Some((_, entries)) = doc.sections.iter().find(|(name, _)| name == STATS_SECTION) else {
        return Ok(options);
    };
    for (key, _) in entries {
        if !STATS_KEYS.contains(&key.as_str()) {
            return Err(ConfigError::Value {
                section: STATS_SECTION.to_string(),
                key: key.clone(),
                message: "unknown key".into(),
            });
        }
    }
    if let Some(v) = parse_value(STATS_SECTION, entries, "alpha", parse_real::<T>)? {
        options.alpha = v;
    }
    if let Some(v) = parse_value(STATS_SECTION, entries, "t_threshold", parse_real::<T>)? {
        options.t_threshold = v;
    }
    if let Some(v) = parse_value(STATS_SECTION, entries, "conventional_f_mapping", parse_bool)? {
        options.conventional_f_mapping = v;
    }
    if let Some(v) = parse_value(STATS_SECTION, entries, "one_tailed", parse_bool)? {
        options.one_tailed = v;
    }
    Ok(options)
}

/// One named run configuration of a batch.
#[derive(Clone, Debug, PartialEq)]
pub struct BatchEntry<T> {
    pub id: String,
    pub config: GaConfig<T>,
}

/// A full experiment: R seeded repetitions of each configured pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Batch<T> {
    pub configs: Vec<BatchEntry<T>>,
    pub runs_per_config: u32,
    pub master_seed: u64,
}

impl<T: Real> Batch<T> {
    /// The default 12-pair batch: every variant crossed with every operator.
    pub fn default_batch(master_seed: u64) -> Self {
        let configs = Variant::ALL
            .into_iter()
            .flat_map(|variant| {
                Crossover::ALL.into_iter().map(move |crossover| BatchEntry {
                    id: format!("{variant}-{crossover}"),
                    config: GaConfig::new(variant, crossover),
                })
            })
            .collect();
        Self {
            configs,
            runs_per_config: 30,
            master_seed,
        }
    }

    /// Batch-level invariants plus per-config violations, each prefixed with
    /// the config id.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        if self.configs.is_empty() {
            violations.push(Violation {
                field: "configs".into(),
                message: "batch defines no run configurations".into(),
            });
        }
        if self.runs_per_config < 2 {
            violations.push(Violation {
                field: "runs_per_config".into(),
                message: format!("must be at least 2, got {}", self.runs_per_config),
            });
        }
        for (index, entry) in self.configs.iter().enumerate() {
            if entry.id.contains(',') || entry.id.contains('\n') {
                violations.push(Violation {
                    field: format!("{}.id", entry.id),
                    message: "config ids must not contain commas or newlines".into(),
                });
            }
            if self.configs[..index]
                .iter()
                .any(|other| other.id == entry.id)
            {
                violations.push(Violation {
                    field: format!("{}.id", entry.id),
                    message: "duplicate config id".into(),
                });
            }
            for violation in crate::domain::validate_config(&entry.config) {
                violations.push(Violation {
                    field: format!("{}.{}", entry.id, violation.field),
                    message: violation.message,
                });
            }
        }
        violations
    }
}

/// Materialize a batch from a parsed document: every section other than
/// `[batch]` and `[stats]` becomes one config, in file order.
pub fn batch_from_doc<T: Real>(doc: &ConfigDoc) -> Result<Batch<T>, ConfigError> {
    let mut batch = Batch {
        configs: Vec::new(),
        runs_per_config: 30,
        master_seed: 0,
    };
    for (name, entries) in &doc.sections {
        match name.as_str() {
            BATCH_SECTION => {
                for (key, _) in entries {
                    if !BATCH_KEYS.contains(&key.as_str()) {
                        return Err(ConfigError::Value {
                            section: BATCH_SECTION.to_string(),
                            key: key.clone(),
                            message: "unknown key".into(),
                        });
                    }
                }
                if let Some(v) = parse_value(name, entries, "runs_per_config", parse_int::<u32>)? {
                    batch.runs_per_config = v;
                }
                if let Some(v) = parse_value(name, entries, "master_seed", parse_int::<u64>)? {
                    batch.master_seed = v;
                }
            }
            STATS_SECTION => {}
            _ => {
                batch.configs.push(BatchEntry {
                    id: name.clone(),
                    config: ga_config_from_entries(name, entries)?,
                });
            }
        }
    }
    if batch.configs.is_empty() {
        return Err(ConfigError::NoConfigs);
    }
    Ok(batch)
}

/// Serialize a batch (with stats options) back to config-file text.
pub fn batch_to_text<T: Real>(batch: &Batch<T>, stats: &StatsOptions<T>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[{BATCH_SECTION}]");
    let _ = writeln!(out, "runs_per_config = {}", batch.runs_per_config);
    let _ = writeln!(out, "master_seed = {}", batch.master_seed);
    let _ = writeln!(out);
    let _ = writeln!(out, "[{STATS_SECTION}]");
    let _ = writeln!(out, "alpha = {}", stats.alpha);
    let _ = writeln!(out, "t_threshold = {}", stats.t_threshold);
    let _ = writeln!(
        out,
        "conventional_f_mapping = {}",
        stats.conventional_f_mapping
    );
    let _ = writeln!(out, "one_tailed = {}", stats.one_tailed);
    for entry in &batch.configs {
        let _ = writeln!(out);
        out.push_str(&ga_config_to_section(&entry.id, &entry.config));
    }
    out
}
