//! Command-line front door: validate configs, execute batches, analyze
//! results, and render the comparison tables.
//!
//! Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 data error.
//! Output files are written to `<name>.partial` and renamed on completion,
//! so an interrupted command never leaves a half-written final artifact.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};

use evobench_core::analysis::{analyze, pairwise_to_csv, report_from_json, report_to_json};
use evobench_core::config::{batch_from_doc, stats_options_from_doc, ConfigDoc};
use evobench_core::harness::{journal_line, parse_results_csv, results_to_csv, run_batch_with};
use evobench_core::report::{anova_table, data_table, format_sig6, ttest_table};
use evobench_core::{Batch, RunRecord, StatsOptions};

const RESULTS_FILE: &str = "results.csv";
const ANALYSIS_FILE: &str = "analysis.json";
const PAIRWISE_FILE: &str = "pairwise_ttest.csv";
const TABLE_DATA_FILE: &str = "table_data.csv";
const TABLE_ANOVA_FILE: &str = "table_anova.csv";
const TABLE_TTEST_FILE: &str = "table_ttest.csv";

#[derive(Parser)]
#[command(
    name = "evobench",
    version,
    about = "GA variant comparison on the Schaffer F6 benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the configured batch of seeded runs and write results.csv.
    Run(CommonArgs),
    /// Analyze results.csv into analysis.json plus pairwise_ttest.csv.
    Analyze(CommonArgs),
    /// Render the data/ANOVA/t-test tables from analysis.json.
    Report(CommonArgs),
    /// Check a config file and list every violation.
    Validate(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Batch definition file (required for run and validate).
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Directory for output artifacts.
    #[arg(long, value_name = "DIR", default_value = "out")]
    out: PathBuf,

    /// Worker threads for batch execution.
    #[arg(long, value_name = "N", env = "EVOBENCH_WORKERS")]
    workers: Option<usize>,

    /// Config override `key=value` or `section.key=value`; repeatable,
    /// applied after file parsing, last one wins.
    #[arg(long = "override", value_name = "K=V")]
    overrides: Vec<String>,

    /// Override the batch master seed.
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,
}

enum CliError {
    Config(String),
    Io(String),
    Data(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) => 3,
            CliError::Data(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(message) => write!(f, "config error: {message}"),
            CliError::Io(message) => write!(f, "io error: {message}"),
            CliError::Data(message) => write!(f, "data error: {message}"),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes early (e.g. `| head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Report(args) => cmd_report(args),
        Command::Validate(args) => cmd_validate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("evobench: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}

/// Load the config file (when given), then apply --override and --seed.
fn load_doc(args: &CommonArgs, config_required: bool) -> Result<ConfigDoc, CliError> {
    let mut doc = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|error| {
                CliError::Config(format!(
                    "cannot read config file {}: {error}",
                    path.display()
                ))
            })?;
            ConfigDoc::parse(&text)
                .map_err(|error| CliError::Config(format!("{}: {error}", path.display())))?
        }
        None if config_required => {
            return Err(CliError::Config("--config PATH is required".into()));
        }
        None => ConfigDoc::default(),
    };
    for spec in &args.overrides {
        doc.apply_override(spec)
            .map_err(|error| CliError::Config(error.to_string()))?;
    }
    if let Some(seed) = args.seed {
        doc.apply_override(&format!("batch.master_seed={seed}"))
            .map_err(|error| CliError::Config(error.to_string()))?;
    }
    Ok(doc)
}

fn load_batch(args: &CommonArgs) -> Result<(Batch, StatsOptions), CliError> {
    let doc = load_doc(args, true)?;
    let batch = batch_from_doc(&doc).map_err(|error| CliError::Config(error.to_string()))?;
    let stats =
        stats_options_from_doc(&doc).map_err(|error| CliError::Config(error.to_string()))?;
    Ok((batch, stats))
}

fn ensure_valid(batch: &Batch) -> Result<(), CliError> {
    let violations = batch.validate();
    if violations.is_empty() {
        return Ok(());
    }
    let listing: Vec<String> = violations.iter().map(ToString::to_string).collect();
    Err(CliError::Config(format!(
        "{} violation(s):\n  {}",
        listing.len(),
        listing.join("\n  ")
    )))
}

fn worker_count(args: &CommonArgs) -> usize {
    args.workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

/// Write to `<path>.partial`, then rename over the final name.
fn write_atomic(path: &Path, content: &str) -> Result<(), CliError> {
    let partial = partial_path(path);
    fs::write(&partial, content)
        .map_err(|error| CliError::Io(format!("cannot write {}: {error}", partial.display())))?;
    fs::rename(&partial, path).map_err(|error| {
        CliError::Io(format!(
            "cannot finalize {}: {error}; partial output left at {}",
            path.display(),
            partial.display()
        ))
    })
}

fn partial_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".partial");
    path.with_file_name(name)
}

fn read_data_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|error| {
        if error.kind() == std::io::ErrorKind::NotFound {
            CliError::Data(format!(
                "{} not found; run the earlier stage first",
                path.display()
            ))
        } else {
            CliError::Io(format!("cannot read {}: {error}", path.display()))
        }
    })
}

fn cmd_run(args: &CommonArgs) -> Result<(), CliError> {
    let (batch, _) = load_batch(args)?;
    ensure_valid(&batch)?;
    let workers = worker_count(args);

    fs::create_dir_all(&args.out).map_err(|error| {
        CliError::Io(format!(
            "cannot create output dir {}: {error}",
            args.out.display()
        ))
    })?;
    let results_path = args.out.join(RESULTS_FILE);
    let journal_path = partial_path(&results_path);

    // Journal rows as runs complete (completion order); the canonical CSV
    // replaces the journal once the batch is done.
    let journal_file = fs::File::create(&journal_path).map_err(|error| {
        CliError::Io(format!("cannot create {}: {error}", journal_path.display()))
    })?;
    let journal = Mutex::new(std::io::BufWriter::new(journal_file));
    let journal_error: Mutex<Option<std::io::Error>> = Mutex::new(None);
    let records = run_batch_with(&batch, workers, |record| {
        let line = journal_line(&batch, record);
        let mut writer = journal.lock().unwrap();
        if let Err(error) = writeln!(writer, "{line}") {
            journal_error.lock().unwrap().get_or_insert(error);
        }
    });
    drop(journal);
    if let Some(error) = journal_error.into_inner().unwrap() {
        return Err(CliError::Io(format!(
            "journal write failed: {error}; partial results left at {}",
            journal_path.display()
        )));
    }

    let csv = results_to_csv(&batch, &records);
    write_atomic(&results_path, &csv)?;

    println!(
        "{:<20} {:>5} {:>8} {:>12}",
        "config_id", "runs", "success", "mean_evals"
    );
    for entry in &batch.configs {
        let group: Vec<&RunRecord> = records
            .iter()
            .filter(|record| record.config_id == entry.id)
            .collect();
        let successes = group.iter().filter(|record| record.success).count();
        let mean =
            group.iter().map(|r| r.evaluations_used as f64).sum::<f64>() / group.len() as f64;
        println!(
            "{:<20} {:>5} {:>8} {:>12}",
            entry.id,
            group.len(),
            successes,
            format_sig6(mean)
        );
    }
    println!("wrote {}", results_path.display());
    Ok(())
}

fn cmd_analyze(args: &CommonArgs) -> Result<(), CliError> {
    let results_path = args.out.join(RESULTS_FILE);
    let text = read_data_file(&results_path)?;
    let rows = parse_results_csv::<f64>(&text)
        .map_err(|error| CliError::Data(format!("{}: {error}", results_path.display())))?;

    let doc = load_doc(args, false)?;
    let options =
        stats_options_from_doc(&doc).map_err(|error| CliError::Config(error.to_string()))?;
    let report = analyze(&rows, &options).map_err(|error| CliError::Data(error.to_string()))?;

    write_atomic(&args.out.join(ANALYSIS_FILE), &report_to_json(&report))?;
    write_atomic(&args.out.join(PAIRWISE_FILE), &pairwise_to_csv(&report))?;

    if let Some(best) = &report.best_of_breed {
        println!("best-of-breed: {}", best.labels.join(", "));
        for (rank, class) in best.partition.classes.iter().enumerate() {
            println!("  class {}: {}", rank + 1, class.join(", "));
        }
    }
    println!("wrote {}", args.out.join(ANALYSIS_FILE).display());
    println!("wrote {}", args.out.join(PAIRWISE_FILE).display());
    Ok(())
}

fn cmd_report(args: &CommonArgs) -> Result<(), CliError> {
    let analysis_path = args.out.join(ANALYSIS_FILE);
    let report = report_from_json(&read_data_file(&analysis_path)?)
        .map_err(|error| CliError::Data(format!("{}: {error}", analysis_path.display())))?;
    let results_path = args.out.join(RESULTS_FILE);
    let rows = parse_results_csv::<f64>(&read_data_file(&results_path)?)
        .map_err(|error| CliError::Data(format!("{}: {error}", results_path.display())))?;

    write_atomic(&args.out.join(TABLE_DATA_FILE), &data_table(&rows))?;
    write_atomic(&args.out.join(TABLE_ANOVA_FILE), &anova_table(&report))?;
    write_atomic(&args.out.join(TABLE_TTEST_FILE), &ttest_table(&report))?;
    for name in [TABLE_DATA_FILE, TABLE_ANOVA_FILE, TABLE_TTEST_FILE] {
        println!("wrote {}", args.out.join(name).display());
    }
    Ok(())
}

fn cmd_validate(args: &CommonArgs) -> Result<(), CliError> {
    let (batch, stats) = load_batch(args)?;
    ensure_valid(&batch)?;
    println!(
        "ok: {} config(s), runs_per_config={}, master_seed={}, alpha={}, t_threshold={}",
        batch.configs.len(),
        batch.runs_per_config,
        batch.master_seed,
        stats.alpha,
        stats.t_threshold
    );
    for entry in &batch.configs {
        println!(
            "  {}: {} {} P={} budget={}",
            entry.id,
            entry.config.variant,
            entry.config.crossover,
            entry.config.population_size,
            entry.config.max_evaluations
        );
    }
    Ok(())
}
