//! Variation and selection primitives: binary tournament selection, SPX,
//! MPX, BLX-alpha, and per-gene Gaussian mutation.
//!
//! All operators are pure functions over an explicit RNG; callers own the
//! RNG state. Every output gene respects the supplied bounds.

use rand::Rng;

use crate::domain::{Bounds, Crossover, Population};
use crate::num::Real;

/// Genes of the children produced by one crossover application (unevaluated).
#[derive(Clone, Debug, PartialEq)]
pub struct CrossoverOutcome<T> {
    pub children: Vec<Vec<T>>,
}

/// Sample two distinct member indices uniformly and return the fitter one.
/// Ties are broken by a fair coin flip.
pub fn binary_tournament<T: Real, R: Rng>(population: &Population<T>, rng: &mut R) -> usize {
    let size = population.len();
    assert!(size >= 2, "binary tournament needs at least 2 members");
    let first = rng.gen_range(0..size);
    let mut second = rng.gen_range(0..size - 1);
    if second >= first {
        second += 1;
    }
    let fitness_first = population.members[first].fitness;
    let fitness_second = population.members[second].fitness;
    if fitness_first > fitness_second {
        first
    } else if fitness_second > fitness_first {
        second
    } else if rng.gen::<bool>() {
        first
    } else {
        second
    }
}

/// Single-point crossover: swap tails at a cut point drawn from `1..length`.
pub fn spx<T: Real, R: Rng>(parent_a: &[T], parent_b: &[T], rng: &mut R) -> (Vec<T>, Vec<T>) {
    assert_eq!(
        parent_a.len(),
        parent_b.len(),
        "parents must have equal length"
    );
    let length = parent_a.len();
    assert!(
        length >= 2,
        "single-point crossover needs an interior cut point"
    );
    let cut = rng.gen_range(1..length);
    let mut child_a = Vec::with_capacity(length);
    let mut child_b = Vec::with_capacity(length);
    child_a.extend_from_slice(&parent_a[..cut]);
    child_a.extend_from_slice(&parent_b[cut..]);
    child_b.extend_from_slice(&parent_b[..cut]);
    child_b.extend_from_slice(&parent_a[cut..]);
    (child_a, child_b)
}

/// Mid-point crossover: one child, each gene the mean of the parent genes.
pub fn mpx<T: Real>(parent_a: &[T], parent_b: &[T]) -> Vec<T> {
    assert_eq!(
        parent_a.len(),
        parent_b.len(),
        "parents must have equal length"
    );
    let two = T::of(2.0);
    parent_a
        .iter()
        .zip(parent_b)
        .map(|(&a, &b)| (a + b) / two)
        .collect()
}

/// Blend crossover: each child gene drawn uniformly from the parental
/// interval expanded by `alpha` times its width, then clamped into bounds.
pub fn blx<T: Real, R: Rng>(
    parent_a: &[T],
    parent_b: &[T],
    alpha: T,
    n_children: usize,
    bounds: &Bounds<T>,
    rng: &mut R,
) -> Vec<Vec<T>> {
    assert_eq!(
        parent_a.len(),
        parent_b.len(),
        "parents must have equal length"
    );
    assert!(alpha >= T::zero(), "blx alpha must be non-negative");
    assert!(
        n_children == 1 || n_children == 2,
        "blx produces 1 or 2 children"
    );
    (0..n_children)
        .map(|_| {
            parent_a
                .iter()
                .zip(parent_b)
                .map(|(&a, &b)| {
                    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                    if lo == hi {
                        return lo;
                    }
                    let margin = alpha * (hi - lo);
                    let sample = rng.gen_range(lo - margin..hi + margin);
                    bounds.clamp(sample)
                })
                .collect()
        })
        .collect()
}

/// Per-gene mutation: with probability `rate`, add a zero-mean Gaussian
/// perturbation of standard deviation `sigma` and clamp into bounds.
pub fn mutate<T: Real, R: Rng>(
    genes: &[T],
    rate: T,
    sigma: T,
    bounds: &Bounds<T>,
    rng: &mut R,
) -> Vec<T> {
    assert!(sigma > T::zero(), "mutation sigma must be positive");
    genes
        .iter()
        .map(|&gene| {
            if T::unit_uniform(rng) < rate {
                bounds.clamp(gene + sigma * T::standard_normal(rng))
            } else {
                gene
            }
        })
        .collect()
}

/// Uniform dispatcher used by the engines: SPX yields two children, MPX one,
/// BLX as many as requested.
pub fn apply_crossover<T: Real, R: Rng>(
    kind: Crossover,
    parent_a: &[T],
    parent_b: &[T],
    blx_alpha: T,
    blx_children: usize,
    bounds: &Bounds<T>,
    rng: &mut R,
) -> CrossoverOutcome<T> {
    let children = match kind {
        Crossover::Spx => {
            let (first, second) = spx(parent_a, parent_b, rng);
            vec![first, second]
        }
        Crossover::Mpx => vec![mpx(parent_a, parent_b)],
        Crossover::Blx => blx(parent_a, parent_b, blx_alpha, blx_children, bounds, rng),
    };
    CrossoverOutcome { children }
}
