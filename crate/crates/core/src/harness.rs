//! Batch experiment driver: R seeded repetitions of each configured pair,
//! results CSV persistence, and grouping of records into sample sets.
//!
//! Reproducibility contract: `(master_seed, batch definition)` fully
//! determines every record, independent of execution order or worker count.

use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::config::{Batch, BatchEntry};
use crate::domain::{Crossover, RunRecord, SampleSet, Variant};
use crate::engines;
use crate::num::Real;

pub const RESULTS_HEADER: &str =
    "config_id,variant,crossover,run_index,seed,evaluations_used,success,best_raw,best_x,best_y";

#[derive(Debug, Error, PartialEq)]
pub enum CsvError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("results file is empty")]
    Empty,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-run seed: SplitMix64 over the master seed, the config id bytes, and
/// the run index. Hashing (rather than sequential seeds) decorrelates the
/// cells of the batch grid.
pub fn derive_seed(master_seed: u64, config_id: &str, run_index: u32) -> u64 {
    let mut state = splitmix64(master_seed);
    for &byte in config_id.as_bytes() {
        state = splitmix64(state ^ u64::from(byte));
    }
    splitmix64(state ^ u64::from(run_index))
}

/// Execute every (config, run_index) cell of the batch on up to `workers`
/// threads. Records come back in grid order (config-major, then run index).
pub fn run_batch<T: Real>(batch: &Batch<T>, workers: usize) -> Vec<RunRecord<T>> {
    run_batch_with(batch, workers, |_| {})
}

/// [`run_batch`] with a completion callback, invoked from worker threads in
/// completion order (useful for journaling progress).
pub fn run_batch_with<T, F>(batch: &Batch<T>, workers: usize, on_complete: F) -> Vec<RunRecord<T>>
where
    T: Real,
    F: Fn(&RunRecord<T>) + Send + Sync,
{
    assert!(workers >= 1, "need at least one worker");
    let cells: Vec<(&BatchEntry<T>, u32)> = batch
        .configs
        .iter()
        .flat_map(|entry| (0..batch.runs_per_config).map(move |run| (entry, run)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("worker pool construction");
    pool.install(|| {
        cells
            .par_iter()
            .map(|&(entry, run_index)| {
                let mut config = entry.config.clone();
                config.seed = derive_seed(batch.master_seed, &entry.id, run_index);
                let mut record = engines::run(&config);
                record.config_id = entry.id.clone();
                record.run_index = run_index;
                on_complete(&record);
                record
            })
            .collect()
    })
}

/// Scientific notation with 17 significant digits; round-trips any f64.
pub fn format_real<T: Real>(value: T) -> String {
    format!("{value:.16e}")
}

/// One parsed results row: the record plus the variant/crossover columns.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvRow<T> {
    pub variant: Variant,
    pub crossover: Crossover,
    pub record: RunRecord<T>,
}

fn results_line<T: Real>(record: &RunRecord<T>, variant: Variant, crossover: Crossover) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        record.config_id,
        variant,
        crossover,
        record.run_index,
        record.seed,
        record.evaluations_used,
        record.success,
        format_real(record.best_raw),
        format_real(record.best_genes[0]),
        format_real(record.best_genes[1]),
    )
}

/// Render the full results CSV (header plus one row per record, in record
/// order). Variant and crossover columns come from the batch definition.
pub fn results_to_csv<T: Real>(batch: &Batch<T>, records: &[RunRecord<T>]) -> String {
    let mut out = String::with_capacity(records.len() * 96);
    out.push_str(RESULTS_HEADER);
    out.push('\n');
    for record in records {
        let entry = batch
            .configs
            .iter()
            .find(|entry| entry.id == record.config_id)
            .expect("record belongs to the batch");
        let _ = writeln!(
            out,
            "{}",
            results_line(record, entry.config.variant, entry.config.crossover)
        );
    }
    out
}

/// Journal line for one completed run (same format as the final CSV rows).
pub fn journal_line<T: Real>(batch: &Batch<T>, record: &RunRecord<T>) -> String {
    let entry = batch
        .configs
        .iter()
        .find(|entry| entry.id == record.config_id)
        .expect("record belongs to the batch");
    results_line(record, entry.config.variant, entry.config.crossover)
}

/// Strict results CSV parser; errors carry 1-based line numbers.
pub fn parse_results_csv<T: Real>(text: &str) -> Result<Vec<CsvRow<T>>, CsvError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(CsvError::Empty)?;
    if header != RESULTS_HEADER {
        return Err(CsvError::Malformed {
            line: 1,
            message: format!("unexpected header {header:?}"),
        });
    }
    let mut rows = Vec::new();
    for (index, raw) in lines {
        let line = index + 1;
        if raw.is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if fields.len() != 10 {
            return Err(CsvError::Malformed {
                line,
                message: format!("expected 10 fields, got {}", fields.len()),
            });
        }
        let malformed = |message: String| CsvError::Malformed { line, message };
        let variant = Variant::parse(fields[1])
            .ok_or_else(|| malformed(format!("unknown variant {:?}", fields[1])))?;
        let crossover = Crossover::parse(fields[2])
            .ok_or_else(|| malformed(format!("unknown crossover {:?}", fields[2])))?;
        let parse_u32 = |s: &str, what: &str| {
            s.parse::<u32>()
                .map_err(|e| malformed(format!("bad {what}: {e}")))
        };
        let parse_u64 = |s: &str, what: &str| {
            s.parse::<u64>()
                .map_err(|e| malformed(format!("bad {what}: {e}")))
        };
        let parse_real = |s: &str, what: &str| {
            s.parse::<T>()
                .map_err(|e| malformed(format!("bad {what}: {e}")))
        };
        let success = match fields[6] {
            "true" => true,
            "false" => false,
            other => return Err(malformed(format!("bad success flag {other:?}"))),
        };
        rows.push(CsvRow {
            variant,
            crossover,
            record: RunRecord {
                config_id: fields[0].to_string(),
                run_index: parse_u32(fields[3], "run_index")?,
                seed: parse_u64(fields[4], "seed")?,
                evaluations_used: parse_u64(fields[5], "evaluations_used")?,
                success,
                best_raw: parse_real(fields[7], "best_raw")?,
                best_genes: vec![
                    parse_real(fields[8], "best_x")?,
                    parse_real(fields[9], "best_y")?,
                ],
            },
        });
    }
    Ok(rows)
}

/// Group records into one sample set per config id (first-appearance order),
/// values ordered by run index. Failed runs contribute the full budget they
/// consumed, which censors them at `max_evaluations`.
pub fn to_sample_sets<T: Real>(records: &[RunRecord<T>]) -> Vec<SampleSet<T>> {
    assert!(!records.is_empty(), "no records to group");
    let mut order: Vec<&str> = Vec::new();
    for record in records {
        if !order.contains(&record.config_id.as_str()) {
            order.push(&record.config_id);
        }
    }
    order
        .into_iter()
        .map(|id| {
            let mut group: Vec<&RunRecord<T>> =
                records.iter().filter(|r| r.config_id == id).collect();
            group.sort_by_key(|r| r.run_index);
            let values = group
                .iter()
                .map(|r| T::from_u64(r.evaluations_used).expect("count fits the scalar"))
                .collect();
            SampleSet {
                label: id.to_string(),
                values,
            }
        })
        .collect()
}
