//! Plain-CSV renderings of the comparison: the raw data grid, the ANOVA
//! summary, and the pairwise t-test grid with class decisions. Rendering is
//! pure, so identical inputs give byte-identical tables.

use std::fmt::Write as _;

use crate::analysis::AnalysisReport;
use crate::harness::CsvRow;

/// Six significant digits, plain decimal notation.
pub fn format_sig6(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return if value.is_nan() {
            "nan".to_string()
        } else if value > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let exponent = value.abs().log10().floor() as i32;
    let decimals = 5 - exponent;
    if decimals <= 0 {
        let factor = 10f64.powi(-decimals);
        format!("{}", (value / factor).round() * factor)
    } else {
        format!("{:.*}", decimals as usize, value)
    }
}

/// The per-run data grid: one column per config (first-appearance order),
/// one row per run index, and a trailing mean row.
pub fn data_table(rows: &[CsvRow<f64>]) -> String {
    let mut labels: Vec<&str> = Vec::new();
    for row in rows {
        if !labels.contains(&row.record.config_id.as_str()) {
            labels.push(&row.record.config_id);
        }
    }
    let mut columns: Vec<Vec<Option<u64>>> = Vec::new();
    let mut max_runs = 0usize;
    for label in &labels {
        let mut cells: Vec<(u32, u64)> = rows
            .iter()
            .filter(|row| row.record.config_id == *label)
            .map(|row| (row.record.run_index, row.record.evaluations_used))
            .collect();
        cells.sort_by_key(|(run, _)| *run);
        let column: Vec<Option<u64>> = cells.into_iter().map(|(_, evals)| Some(evals)).collect();
        max_runs = max_runs.max(column.len());
        columns.push(column);
    }

    let mut out = String::new();
    out.push_str("run_index");
    for label in &labels {
        let _ = write!(out, ",{label}");
    }
    out.push('\n');
    for run in 0..max_runs {
        let _ = write!(out, "{run}");
        for column in &columns {
            match column.get(run).copied().flatten() {
                Some(evals) => {
                    let _ = write!(out, ",{evals}");
                }
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out.push_str("mean");
    for column in &columns {
        let values: Vec<f64> = column.iter().flatten().map(|&v| v as f64).collect();
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let _ = write!(out, ",{}", format_sig6(mean));
    }
    out.push('\n');
    out
}

/// Every ANOVA the analysis ran, one row each.
pub fn anova_table(report: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str("scope,inputs,statistic,df1,df2,p_value,alpha,significant\n");
    let alpha = report.options.alpha;
    let mut push = |scope: &str, test: &crate::analysis::TestReportJson| {
        let _ = writeln!(
            out,
            "{scope},{},{},{},{},{},{},{}",
            test.inputs.join("|"),
            format_sig6(test.statistic.0),
            format_sig6(test.df1),
            format_sig6(test.df2),
            format_sig6(test.p_value),
            format_sig6(alpha),
            test.p_value < alpha,
        );
    };
    for section in &report.variant_sections {
        if let Some(anova) = &section.anova {
            push(&section.variant, anova);
        }
    }
    if let Some(best) = &report.best_of_breed {
        push("best_of_breed", &best.anova);
    }
    out
}

/// Every pairwise t-test with its F-test context and class decision.
pub fn ttest_table(report: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str("scope,label_a,label_b,test_variant,t,df,p,f_statistic,f_critical,variance_decision,decision\n");
    let mut push = |scope: &str, test: &crate::analysis::PairwiseTest| {
        let _ = writeln!(
            out,
            "{scope},{},{},{},{},{},{},{},{},{},{}",
            test.label_a,
            test.label_b,
            test.t_variant,
            format_sig6(test.t_test.statistic.0),
            format_sig6(test.t_test.df1),
            format_sig6(test.t_test.p_value),
            format_sig6(test.f_test.statistic.0),
            format_sig6(test.f_critical),
            test.variance_decision,
            test.decision,
        );
    };
    for section in &report.variant_sections {
        for test in &section.pairwise {
            push(&section.variant, test);
        }
    }
    if let Some(best) = &report.best_of_breed {
        for test in &best.pairwise {
            push("best_of_breed", test);
        }
    }
    out
}
