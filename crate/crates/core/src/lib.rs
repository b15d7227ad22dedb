//! Real-coded genetic algorithm toolkit: four population-update strategies
//! (GGA, steady-state, steady-generational, mu+mu) with three crossover
//! operators (SPX, MPX, BLX-alpha) on the Schaffer F6 benchmark, a seeded
//! batch harness, and a self-contained statistics engine (one-way ANOVA,
//! F-test, pooled/Welch t-tests) that partitions the variants into
//! equivalence classes.
//!
//! The numeric modules are generic over the [`num::Real`] scalar (f32 or
//! f64); the aliases below pin the `f64` instantiations the harness, the
//! analysis pipeline, and the CLI work with.

pub mod analysis;
pub mod config;
pub mod domain;
pub mod engines;
pub mod harness;
pub mod num;
pub mod objective;
pub mod operators;
pub mod report;
pub mod stats;

pub use num::Real;

/// `f64` instantiations used throughout the harness and CLI.
pub type Bounds = domain::Bounds<f64>;
pub type Individual = domain::Individual<f64>;
pub type Population = domain::Population<f64>;
pub type GaConfig = domain::GaConfig<f64>;
pub type RunRecord = domain::RunRecord<f64>;
pub type SampleSet = domain::SampleSet<f64>;
pub type Batch = config::Batch<f64>;
pub type BatchEntry = config::BatchEntry<f64>;
pub type StatsOptions = config::StatsOptions<f64>;
pub type EngineState = engines::EngineState<f64>;
pub type CsvRow = harness::CsvRow<f64>;
pub type TestReport = stats::TestReport<f64>;
pub type EquivalencePartition = stats::EquivalencePartition<f64>;
