//! Schaffer F6 benchmark, fitness transform, and the budgeted evaluation
//! counter every GA variant charges against.

use thiserror::Error;

use crate::num::Real;

/// Raised when a run asks for an evaluation it can no longer afford.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("evaluation budget of {budget} exhausted")]
pub struct BudgetExhausted {
    pub budget: u64,
}

/// Schaffer F6:
/// `f(x, y) = 0.5 + (sin^2(sqrt(x^2 + y^2)) - 0.5) / (1 + 0.001 (x^2 + y^2))^2`.
///
/// Global minimum f(0, 0) = 0; 0 <= f < 1 everywhere.
pub fn schaffer_f6<T: Real>(genes: &[T]) -> T {
    assert_eq!(
        genes.len(),
        2,
        "schaffer_f6 takes exactly 2 genes, got {}",
        genes.len()
    );
    let half = T::of(0.5);
    let sum_sq = genes[0] * genes[0] + genes[1] * genes[1];
    let numer = sum_sq.sqrt().sin().powi(2) - half;
    let denom = (T::one() + T::of(0.001) * sum_sq).powi(2);
    half + numer / denom
}

/// Maximized fitness of a raw objective value: `1 - raw`.
///
/// Strictly decreasing in `raw`, so any selection logic depending only on
/// fitness ordering is unaffected by the choice of transform.
pub fn fitness_of<T: Real>(raw: T) -> T {
    T::one() - raw
}

/// Monotone counter of objective calls, capped at a budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvaluationCounter {
    used: u64,
    budget: u64,
}

impl EvaluationCounter {
    pub fn new(budget: u64) -> Self {
        assert!(budget >= 1, "evaluation budget must be positive");
        Self { used: 0, budget }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn remaining(&self) -> u64 {
        self.budget - self.used
    }

    fn charge(&mut self) -> Result<(), BudgetExhausted> {
        if self.used == self.budget {
            return Err(BudgetExhausted {
                budget: self.budget,
            });
        }
        self.used += 1;
        Ok(())
    }
}

/// Charge one evaluation and return `(raw, fitness)` for the genes.
pub fn evaluate<T: Real>(
    counter: &mut EvaluationCounter,
    genes: &[T],
) -> Result<(T, T), BudgetExhausted> {
    counter.charge()?;
    let raw = schaffer_f6(genes);
    Ok((raw, fitness_of(raw)))
}
