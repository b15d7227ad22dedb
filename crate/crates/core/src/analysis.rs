//! Comparison pipeline over a results CSV: per-variant crossover analysis,
//! best-of-breed selection, and equivalence partitioning, packaged as a
//! JSON-serializable report plus a flat pairwise t-test CSV.
//!
//! This layer is concrete over `f64`: it consumes parsed CSV rows and feeds
//! the generic stats module.

use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::config::StatsOptions;
use crate::domain::{SampleSet, Variant};
use crate::harness::{format_real, CsvRow};
use crate::stats::{
    anova, f_test, mean_var, partition_equivalence, t_rule, t_test_tailed, EquivalencePartition,
    TVariant, TestReport, VarianceDecision,
};

pub const PAIRWISE_HEADER: &str = "label_a,label_b,test_variant,t,df,p,decision";

#[derive(Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("no result rows to analyze")]
    NoRows,
    #[error("config {config_id:?} appears with conflicting variant or crossover columns")]
    ConflictingMetadata { config_id: String },
    #[error("config {label:?} has {n} runs; at least 2 are required")]
    TooFewRuns { label: String, n: usize },
}

/// An `f64` that serializes non-finite values as strings so the report JSON
/// stays lossless (infinite statistics are legal sentinels).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JsonReal(pub f64);

impl Serialize for JsonReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            serializer.serialize_f64(self.0)
        } else if self.0.is_nan() {
            serializer.serialize_str("nan")
        } else if self.0 > 0.0 {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_str("-inf")
        }
    }
}

impl<'de> Deserialize<'de> for JsonReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(v) => Ok(JsonReal(v)),
            Raw::Text(s) => match s.as_str() {
                "inf" => Ok(JsonReal(f64::INFINITY)),
                "-inf" => Ok(JsonReal(f64::NEG_INFINITY)),
                "nan" => Ok(JsonReal(f64::NAN)),
                other => Err(D::Error::custom(format!("bad real literal {other:?}"))),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestReportJson {
    pub kind: String,
    pub statistic: JsonReal,
    pub df1: f64,
    pub df2: f64,
    pub p_value: f64,
    pub inputs: Vec<String>,
}

impl From<&TestReport<f64>> for TestReportJson {
    fn from(report: &TestReport<f64>) -> Self {
        Self {
            kind: report.kind.token().to_string(),
            statistic: JsonReal(report.statistic),
            df1: report.df1,
            df2: report.df2,
            p_value: report.p_value,
            inputs: report.inputs.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub label: String,
    pub variant: String,
    pub crossover: String,
    pub n: usize,
    pub mean: f64,
    pub variance: f64,
    pub failed_runs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairwiseTest {
    pub label_a: String,
    pub label_b: String,
    pub f_test: TestReportJson,
    pub f_critical: f64,
    pub variance_decision: String,
    pub degenerate_f: bool,
    pub t_variant: String,
    pub t_test: TestReportJson,
    pub decision: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStepJson {
    pub step: usize,
    pub removed_label: String,
    pub p_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub classes: Vec<Vec<String>>,
    pub trace: Vec<TraceStepJson>,
}

impl From<&EquivalencePartition<f64>> for PartitionJson {
    fn from(partition: &EquivalencePartition<f64>) -> Self {
        Self {
            classes: partition.classes.clone(),
            trace: partition
                .trace
                .iter()
                .map(|step| TraceStepJson {
                    step: step.step,
                    removed_label: step.removed_label.clone(),
                    p_value: step.p_value,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VariantSection {
    pub variant: String,
    /// Absent when the variant has a single crossover sample.
    pub anova: Option<TestReportJson>,
    pub pairwise: Vec<PairwiseTest>,
    pub partition: Option<PartitionJson>,
    /// Crossover label with the lowest mean evaluation count.
    pub best_label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BestOfBreed {
    pub labels: Vec<String>,
    pub anova: TestReportJson,
    pub pairwise: Vec<PairwiseTest>,
    pub partition: PartitionJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisOptionsJson {
    pub alpha: f64,
    pub t_threshold: f64,
    pub conventional_f_mapping: bool,
    pub one_tailed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub options: AnalysisOptionsJson,
    /// Evaluation cost model backing the sample values.
    pub accounting: String,
    pub samples: Vec<SampleSummary>,
    pub variant_sections: Vec<VariantSection>,
    /// Absent when fewer than two variants are present.
    pub best_of_breed: Option<BestOfBreed>,
}

const ACCOUNTING_NOTE: &str = "evaluations per cycle: GGA=P, SSGA=1, SGGA=1 (one offspring \
exists to evaluate), MU_PLUS_MU=P; initialization charges P; failed runs are censored at \
max_evaluations";

/// Map the F-test variance decision to the t-test variant to run.
fn choose_t_variant(decision: VarianceDecision, conventional: bool) -> TVariant {
    match (decision, conventional) {
        (VarianceDecision::UnequalVar, false) => TVariant::EqualVar,
        (VarianceDecision::EqualVar, false) => TVariant::Welch,
        (VarianceDecision::UnequalVar, true) => TVariant::Welch,
        (VarianceDecision::EqualVar, true) => TVariant::EqualVar,
    }
}

fn pairwise_tests(samples: &[&SampleSet<f64>], options: &StatsOptions<f64>) -> Vec<PairwiseTest> {
    let mut tests = Vec::new();
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let a = samples[i];
            let b = samples[j];
            let f_outcome = f_test(a, b, options.alpha);
            let t_variant = choose_t_variant(f_outcome.decision, options.conventional_f_mapping);
            let t_report = t_test_tailed(a, b, t_variant, options.one_tailed);
            let decision = t_rule(&t_report, options.t_threshold);
            tests.push(PairwiseTest {
                label_a: a.label.clone(),
                label_b: b.label.clone(),
                f_test: (&f_outcome.report).into(),
                f_critical: f_outcome.critical,
                variance_decision: f_outcome.decision.token().to_string(),
                degenerate_f: f_outcome.degenerate,
                t_variant: t_variant.token().to_string(),
                t_test: (&t_report).into(),
                decision: decision.token().to_string(),
            });
        }
    }
    tests
}

/// Run the full comparison pipeline over parsed result rows.
pub fn analyze(
    rows: &[CsvRow<f64>],
    options: &StatsOptions<f64>,
) -> Result<AnalysisReport, AnalysisError> {
    if rows.is_empty() {
        return Err(AnalysisError::NoRows);
    }

    // Group rows per config id, keeping first-appearance order.
    struct Group<'a> {
        label: &'a str,
        variant: Variant,
        crossover: crate::domain::Crossover,
        rows: Vec<&'a CsvRow<f64>>,
    }
    let mut groups: Vec<Group> = Vec::new();
    for row in rows {
        match groups.iter_mut().find(|g| g.label == row.record.config_id) {
            Some(group) => {
                if group.variant != row.variant || group.crossover != row.crossover {
                    return Err(AnalysisError::ConflictingMetadata {
                        config_id: row.record.config_id.clone(),
                    });
                }
                group.rows.push(row);
            }
            None => groups.push(Group {
                label: &row.record.config_id,
                variant: row.variant,
                crossover: row.crossover,
                rows: vec![row],
            }),
        }
    }

    let mut samples: Vec<SampleSet<f64>> = Vec::new();
    let mut summaries = Vec::new();
    for group in &groups {
        let mut ordered = group.rows.clone();
        ordered.sort_by_key(|row| row.record.run_index);
        if ordered.len() < 2 {
            return Err(AnalysisError::TooFewRuns {
                label: group.label.to_string(),
                n: ordered.len(),
            });
        }
        let values: Vec<f64> = ordered
            .iter()
            .map(|row| row.record.evaluations_used as f64)
            .collect();
        let sample = SampleSet {
            label: group.label.to_string(),
            values,
        };
        let (mean, variance) = mean_var(&sample);
        summaries.push(SampleSummary {
            label: group.label.to_string(),
            variant: group.variant.token().to_string(),
            crossover: group.crossover.token().to_string(),
            n: sample.len(),
            mean,
            variance,
            failed_runs: ordered.iter().filter(|row| !row.record.success).count(),
        });
        samples.push(sample);
    }

    // Per-variant crossover comparison, in canonical variant order.
    let mut variant_sections = Vec::new();
    let mut best_labels: Vec<String> = Vec::new();
    for variant in Variant::ALL {
        let indices: Vec<usize> = groups
            .iter()
            .enumerate()
            .filter(|(_, g)| g.variant == variant)
            .map(|(i, _)| i)
            .collect();
        if indices.is_empty() {
            continue;
        }
        let variant_samples: Vec<&SampleSet<f64>> = indices.iter().map(|&i| &samples[i]).collect();
        let best_label = variant_samples
            .iter()
            .min_by(|a, b| {
                mean_var(a)
                    .0
                    .partial_cmp(&mean_var(b).0)
                    .expect("means are finite")
            })
            .expect("variant has at least one sample")
            .label
            .clone();
        let owned: Vec<SampleSet<f64>> = variant_samples.iter().map(|s| (*s).clone()).collect();
        let (anova_report, partition) = if owned.len() >= 2 {
            (
                Some((&anova(&owned)).into()),
                Some((&partition_equivalence(&owned, options.alpha)).into()),
            )
        } else {
            (None, None)
        };
        variant_sections.push(VariantSection {
            variant: variant.token().to_string(),
            anova: anova_report,
            pairwise: pairwise_tests(&variant_samples, options),
            partition,
            best_label: best_label.clone(),
        });
        best_labels.push(best_label);
    }

    // Best-of-breed comparison across the per-variant winners.
    let best_of_breed = if best_labels.len() >= 2 {
        let best_samples: Vec<&SampleSet<f64>> = best_labels
            .iter()
            .map(|label| {
                samples
                    .iter()
                    .find(|s| &s.label == label)
                    .expect("best label exists")
            })
            .collect();
        let owned: Vec<SampleSet<f64>> = best_samples.iter().map(|s| (*s).clone()).collect();
        Some(BestOfBreed {
            labels: best_labels.clone(),
            anova: (&anova(&owned)).into(),
            pairwise: pairwise_tests(&best_samples, options),
            partition: (&partition_equivalence(&owned, options.alpha)).into(),
        })
    } else {
        None
    };

    Ok(AnalysisReport {
        options: AnalysisOptionsJson {
            alpha: options.alpha,
            t_threshold: options.t_threshold,
            conventional_f_mapping: options.conventional_f_mapping,
            one_tailed: options.one_tailed,
        },
        accounting: ACCOUNTING_NOTE.to_string(),
        samples: summaries,
        variant_sections,
        best_of_breed,
    })
}

/// Flat CSV of every pairwise t-test in the report, section order preserved.
pub fn pairwise_to_csv(report: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str(PAIRWISE_HEADER);
    out.push('\n');
    let sections = report
        .variant_sections
        .iter()
        .flat_map(|section| section.pairwise.iter())
        .chain(
            report
                .best_of_breed
                .iter()
                .flat_map(|best| best.pairwise.iter()),
        );
    for test in sections {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            test.label_a,
            test.label_b,
            test.t_variant,
            format_real(test.t_test.statistic.0),
            format_real(test.t_test.df1),
            format_real(test.t_test.p_value),
            test.decision,
        );
    }
    out
}

/// Pretty JSON with a trailing newline; field order fixed by the structs.
pub fn report_to_json(report: &AnalysisReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn report_from_json(text: &str) -> Result<AnalysisReport, serde_json::Error> {
    serde_json::from_str(text)
}
