//! The analysis pipeline: one-way ANOVA, variance-ratio F-test, pooled and
//! Welch t-tests, the fixed |t| threshold rule, and iterative partitioning
//! of samples into equivalence classes.

use std::fmt;

use crate::domain::SampleSet;
use crate::num::Real;

pub mod special;

use special::{f_critical, f_survival, t_two_tailed_p};

/// The |t| threshold separating equivalence classes.
pub const DEFAULT_T_THRESHOLD: f64 = 1.7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TestKind {
    Anova,
    FTest,
    TEqualVar,
    TWelch,
}

impl TestKind {
    pub fn token(self) -> &'static str {
        match self {
            TestKind::Anova => "ANOVA",
            TestKind::FTest => "F_TEST",
            TestKind::TEqualVar => "T_EQUAL_VAR",
            TestKind::TWelch => "T_WELCH",
        }
    }

    pub fn is_t_test(self) -> bool {
        matches!(self, TestKind::TEqualVar | TestKind::TWelch)
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Result of one hypothesis test. `df2` is zero for t-tests; for the F-test
/// the `inputs` are ordered (numerator label, denominator label).
#[derive(Clone, Debug, PartialEq)]
pub struct TestReport<T> {
    pub kind: TestKind,
    pub statistic: T,
    pub df1: T,
    pub df2: T,
    pub p_value: T,
    pub inputs: Vec<String>,
}

/// Arithmetic mean and unbiased sample variance (divisor n - 1).
pub fn mean_var<T: Real>(sample: &SampleSet<T>) -> (T, T) {
    let n = sample.values.len();
    assert!(n >= 2, "mean_var needs at least 2 values, got {n}");
    let count = T::of(n as f64);
    let mean = sample.values.iter().fold(T::zero(), |acc, &v| acc + v) / count;
    let sum_sq = sample
        .values
        .iter()
        .fold(T::zero(), |acc, &v| acc + (v - mean) * (v - mean));
    (mean, sum_sq / (count - T::one()))
}

/// One-way ANOVA over k groups: `F = MS_between / MS_within`,
/// df1 = k - 1, df2 = N - k.
pub fn anova<T: Real>(samples: &[SampleSet<T>]) -> TestReport<T> {
    let k = samples.len();
    assert!(k >= 2, "anova needs at least 2 groups, got {k}");
    for sample in samples {
        assert!(
            sample.len() >= 2,
            "anova group {:?} needs n >= 2",
            sample.label
        );
    }
    let total: usize = samples.iter().map(SampleSet::len).sum();
    let grand_sum = samples.iter().fold(T::zero(), |acc, s| {
        acc + s.values.iter().fold(T::zero(), |a, &v| a + v)
    });
    let grand_mean = grand_sum / T::of(total as f64);

    let mut ss_between = T::zero();
    let mut ss_within = T::zero();
    for sample in samples {
        let (mean, _) = mean_var(sample);
        let n = T::of(sample.len() as f64);
        ss_between = ss_between + n * (mean - grand_mean) * (mean - grand_mean);
        ss_within = ss_within
            + sample
                .values
                .iter()
                .fold(T::zero(), |acc, &v| acc + (v - mean) * (v - mean));
    }

    let df1 = T::of((k - 1) as f64);
    let df2 = T::of((total - k) as f64);
    let inputs: Vec<String> = samples.iter().map(|s| s.label.clone()).collect();

    let (statistic, p_value) = if ss_within == T::zero() {
        if ss_between == T::zero() {
            (T::zero(), T::one())
        } else {
            // Unequal means with zero within-group spread.
            (T::infinity(), T::zero())
        }
    } else {
        let f = (ss_between / df1) / (ss_within / df2);
        (f, f_survival(f, df1, df2))
    };

    TestReport {
        kind: TestKind::Anova,
        statistic,
        df1,
        df2,
        p_value,
        inputs,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarianceDecision {
    EqualVar,
    UnequalVar,
}

impl VarianceDecision {
    pub fn token(self) -> &'static str {
        match self {
            VarianceDecision::EqualVar => "EQUAL_VAR",
            VarianceDecision::UnequalVar => "UNEQUAL_VAR",
        }
    }
}

/// F-test report plus the variance decision it implies.
#[derive(Clone, Debug, PartialEq)]
pub struct FTestOutcome<T> {
    pub report: TestReport<T>,
    pub decision: VarianceDecision,
    pub critical: T,
    /// Both variances were zero; the statistic is reported as 1.
    pub degenerate: bool,
}

/// Variance-ratio F-test with the larger variance in the numerator; the
/// report's `inputs` record (numerator, denominator). `F > critical` at
/// `alpha` (one-tailed) decides UNEQUAL_VAR.
pub fn f_test<T: Real>(a: &SampleSet<T>, b: &SampleSet<T>, alpha: T) -> FTestOutcome<T> {
    assert!(
        a.len() >= 2 && b.len() >= 2,
        "f_test needs n >= 2 on both sides"
    );
    let (_, var_a) = mean_var(a);
    let (_, var_b) = mean_var(b);

    if var_a == T::zero() && var_b == T::zero() {
        let df1 = T::of((a.len() - 1) as f64);
        let df2 = T::of((b.len() - 1) as f64);
        let critical = f_critical(alpha, df1, df2);
        return FTestOutcome {
            report: TestReport {
                kind: TestKind::FTest,
                statistic: T::one(),
                df1,
                df2,
                p_value: f_survival(T::one(), df1, df2),
                inputs: vec![a.label.clone(), b.label.clone()],
            },
            decision: VarianceDecision::EqualVar,
            critical,
            degenerate: true,
        };
    }

    let (numerator, denominator) = if var_a >= var_b { (a, b) } else { (b, a) };
    let (_, var_n) = mean_var(numerator);
    let (_, var_d) = mean_var(denominator);
    let df1 = T::of((numerator.len() - 1) as f64);
    let df2 = T::of((denominator.len() - 1) as f64);
    let (statistic, p_value) = if var_d == T::zero() {
        (T::infinity(), T::zero())
    } else {
        let f = var_n / var_d;
        (f, f_survival(f, df1, df2))
    };
    let critical = f_critical(alpha, df1, df2);
    FTestOutcome {
        report: TestReport {
            kind: TestKind::FTest,
            statistic,
            df1,
            df2,
            p_value,
            inputs: vec![numerator.label.clone(), denominator.label.clone()],
        },
        decision: if statistic > critical {
            VarianceDecision::UnequalVar
        } else {
            VarianceDecision::EqualVar
        },
        critical,
        degenerate: false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TVariant {
    EqualVar,
    Welch,
}

impl TVariant {
    pub fn token(self) -> &'static str {
        match self {
            TVariant::EqualVar => "EQUAL_VAR",
            TVariant::Welch => "WELCH",
        }
    }

    pub fn parse(token: &str) -> Option<Self> {
        match token {
            "EQUAL_VAR" => Some(TVariant::EqualVar),
            "WELCH" => Some(TVariant::Welch),
            _ => None,
        }
    }
}

impl fmt::Display for TVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Two-sample t-test, two-tailed.
pub fn t_test<T: Real>(a: &SampleSet<T>, b: &SampleSet<T>, variant: TVariant) -> TestReport<T> {
    t_test_tailed(a, b, variant, false)
}

/// Two-sample t-test; `one_tailed` halves the two-tailed p-value.
pub fn t_test_tailed<T: Real>(
    a: &SampleSet<T>,
    b: &SampleSet<T>,
    variant: TVariant,
    one_tailed: bool,
) -> TestReport<T> {
    assert!(
        a.len() >= 2 && b.len() >= 2,
        "t_test needs n >= 2 on both sides"
    );
    let n_a = T::of(a.len() as f64);
    let n_b = T::of(b.len() as f64);
    let (mean_a, var_a) = mean_var(a);
    let (mean_b, var_b) = mean_var(b);
    let difference = mean_a - mean_b;

    let (kind, df, squared_error) = match variant {
        TVariant::EqualVar => {
            let df = n_a + n_b - T::of(2.0);
            let pooled = ((n_a - T::one()) * var_a + (n_b - T::one()) * var_b) / df;
            (
                TestKind::TEqualVar,
                df,
                pooled * (T::one() / n_a + T::one() / n_b),
            )
        }
        TVariant::Welch => {
            let term_a = var_a / n_a;
            let term_b = var_b / n_b;
            let sum = term_a + term_b;
            let df = if sum == T::zero() {
                // Both variances zero; any positive df gives the same
                // degenerate p-value below.
                n_a + n_b - T::of(2.0)
            } else {
                sum * sum
                    / (term_a * term_a / (n_a - T::one()) + term_b * term_b / (n_b - T::one()))
            };
            (TestKind::TWelch, df, sum)
        }
    };

    let (statistic, mut p_value) = if squared_error == T::zero() {
        if difference == T::zero() {
            (T::zero(), T::one())
        } else {
            let sign = if difference > T::zero() {
                T::one()
            } else {
                -T::one()
            };
            (sign * T::infinity(), T::zero())
        }
    } else {
        let t = difference / squared_error.sqrt();
        (t, t_two_tailed_p(t, df))
    };
    if one_tailed {
        p_value = p_value / T::of(2.0);
    }

    TestReport {
        kind,
        statistic,
        df1: df,
        df2: T::zero(),
        p_value,
        inputs: vec![a.label.clone(), b.label.clone()],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassDecision {
    SameClass,
    DifferentClass,
}

impl ClassDecision {
    pub fn token(self) -> &'static str {
        match self {
            ClassDecision::SameClass => "SAME_CLASS",
            ClassDecision::DifferentClass => "DIFFERENT_CLASS",
        }
    }
}

impl fmt::Display for ClassDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// The fixed-threshold rule: |t| strictly above `threshold` separates the
/// two algorithms into different equivalence classes.
pub fn t_rule<T: Real>(report: &TestReport<T>, threshold: T) -> ClassDecision {
    assert!(
        report.kind.is_t_test(),
        "t_rule applies to t-test reports only"
    );
    if report.statistic.abs() > threshold {
        ClassDecision::DifferentClass
    } else {
        ClassDecision::SameClass
    }
}

/// One removal step of the partition loop.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep<T> {
    pub step: usize,
    pub removed_label: String,
    pub p_value: T,
}

/// Disjoint label classes covering the input, best class first, plus the
/// removal trace that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalencePartition<T> {
    pub classes: Vec<Vec<String>>,
    pub trace: Vec<TraceStep<T>>,
}

/// Iterative ANOVA partitioning: while the current set differs significantly
/// (p < alpha), drop the worst-mean sample; the survivors form one class and
/// the removed samples are partitioned recursively in removal order.
pub fn partition_equivalence<T: Real>(
    samples: &[SampleSet<T>],
    alpha: T,
) -> EquivalencePartition<T> {
    assert!(samples.len() >= 2, "partition needs at least 2 samples");
    let mut classes = Vec::new();
    let mut trace = Vec::new();
    let mut step = 0usize;
    partition_level(samples.to_vec(), alpha, &mut step, &mut classes, &mut trace);
    EquivalencePartition { classes, trace }
}

fn partition_level<T: Real>(
    samples: Vec<SampleSet<T>>,
    alpha: T,
    step: &mut usize,
    classes: &mut Vec<Vec<String>>,
    trace: &mut Vec<TraceStep<T>>,
) {
    if samples.len() == 1 {
        classes.push(vec![samples[0].label.clone()]);
        return;
    }
    let mut current = samples;
    let mut removed = Vec::new();
    while current.len() >= 2 {
        let report = anova(&current);
        if report.p_value >= alpha {
            break;
        }
        let worst = worst_mean_index(&current);
        *step += 1;
        trace.push(TraceStep {
            step: *step,
            removed_label: current[worst].label.clone(),
            p_value: report.p_value,
        });
        removed.push(current.remove(worst));
    }
    classes.push(current.iter().map(|s| s.label.clone()).collect());
    if !removed.is_empty() {
        partition_level(removed, alpha, step, classes, trace);
    }
}

/// Index of the sample with the largest mean (worst performance, since
/// values are evaluation counts). Ties keep the lowest index.
fn worst_mean_index<T: Real>(samples: &[SampleSet<T>]) -> usize {
    let mut worst = 0;
    let mut worst_mean = mean_var(&samples[0]).0;
    for (i, sample) in samples.iter().enumerate().skip(1) {
        let (mean, _) = mean_var(sample);
        if mean > worst_mean {
            worst = i;
            worst_mean = mean;
        }
    }
    worst
}
