//! Command-line front end. Each subcommand maps onto one library operation
//! and writes either a JSON report or a plot-ready CSV table.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use roc_metrics::analytic::{
    burgt_k, burgt_preference_sweep, burgt_row, lar_rar_bounds, sweep_grid,
    trapezoid_decomposition, SweepRow, CROSS_CHECK_TOL, TOL_ANALYTIC,
};
use roc_metrics::empirical::{binary_report, cap_curve, empirical_roc, thin, ScoreSample};
use roc_metrics::imputed::{imputed_report, imputed_roc};
use roc_metrics::validation::{validate, DEFAULT_Z};
use roc_metrics::{MetricReport, RocPolyline, Source};

mod error;
pub mod input;
pub mod output;

pub use error::CliError;
use output::{fmt12, Curves, Decomposition, Document, SweepOut, Verdict, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "roc-metrics", version, about = "AR, LAR and RAR discriminatory power metrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Metrics from scores and binary default outcomes.
    Binary(BinaryArgs),
    /// Metrics imputed from a calibrated grade table.
    Imputed(ImputedArgs),
    /// Triangular vertices, multipliers and trapezoid for given metrics.
    Analyze(AnalyzeArgs),
    /// van der Burgt curve metrics or the preference sweep.
    Burgt(BurgtArgs),
    /// Compare a binary report with an imputed report.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct BinaryArgs {
    /// CSV file with a score column and a default flag column.
    pub input: PathBuf,
    #[arg(long, default_value = "score")]
    pub score_col: String,
    #[arg(long, default_value = "default")]
    pub default_col: String,
    /// Treat lower scores as better.
    #[arg(long)]
    pub flip_scores: bool,
    /// Keep at most this many non-defaults (random thinning).
    #[arg(long)]
    pub thin_n: Option<usize>,
    /// Keep at most this many defaults (random thinning).
    #[arg(long)]
    pub thin_d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include the ROC and CAP polylines in the report.
    #[arg(long)]
    pub emit_curves: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ImputedArgs {
    /// CSV file with columns grade,count,pd sorted by descending pd.
    pub input: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub ar: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub lar: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub rar: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["k", "ar", "sweep"])))]
pub struct BurgtArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub ar: Option<f64>,
    /// AR grid as lo:hi:step.
    #[arg(long)]
    pub sweep: Option<String>,
    /// Absolute quadrature tolerance.
    #[arg(long, default_value_t = TOL_ANALYTIC)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// JSON report produced by the `binary` subcommand.
    #[arg(long)]
    pub binary: PathBuf,
    /// JSON report produced by the `imputed` subcommand.
    #[arg(long)]
    pub imputed: PathBuf,
    #[arg(long, default_value_t = DEFAULT_Z)]
    pub z: f64,
    /// Neutrality band for the preference comparison (default: binary sigma_ar).
    #[arg(long)]
    pub band: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Text produced by a command, plus warnings meant for standard error.
#[derive(Debug, Default)]
pub struct Outcome {
    pub text: String,
    pub warnings: Vec<String>,
}

/// Runs the command and returns its output without writing it anywhere.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Binary(a) => cmd_binary(a),
        Command::Imputed(a) => cmd_imputed(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Burgt(a) => cmd_burgt(a),
        Command::Validate(a) => cmd_validate(a),
    }
}

/// Runs the command and writes its output to `--out` or standard output.
/// Returns the warnings.
pub fn run(cli: &Cli) -> Result<Vec<String>, CliError> {
    let outcome = execute(cli)?;
    match out_path(cli) {
        Some(path) => fs::write(path, &outcome.text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome.warnings)
}

fn out_path(cli: &Cli) -> Option<&Path> {
    let o = match &cli.command {
        Command::Binary(a) => &a.output,
        Command::Imputed(a) => &a.output,
        Command::Analyze(a) => &a.output,
        Command::Burgt(a) => &a.output,
        Command::Validate(a) => &a.output,
    };
    o.out.as_deref()
}

fn curve_csv(poly: &RocPolyline) -> String {
    let mut s = String::from("x,y\n");
    for &(x, y) in &poly.points {
        let _ = writeln!(s, "{},{}", fmt12(x), fmt12(y));
    }
    s
}

pub fn cmd_binary(a: &BinaryArgs) -> Result<Outcome, CliError> {
    let (good, bad) = input::read_binary(&a.input, &a.score_col, &a.default_col)?;
    let mut sample = ScoreSample::from_unsorted(good, bad)?;
    if a.flip_scores {
        sample = sample.negated();
    }
    if a.thin_n.is_some() || a.thin_d.is_some() {
        let max_n = a.thin_n.unwrap_or(usize::MAX);
        let max_d = a.thin_d.unwrap_or(usize::MAX);
        sample = thin(&sample, max_n, max_d, a.seed)?;
    }
    let roc = empirical_roc(&sample);
    if a.output.format == Some(Format::Csv) {
        return Ok(Outcome { text: curve_csv(&roc), warnings: vec![] });
    }
    let report = binary_report(&sample)?;
    let mut doc = Document::from_report(&report);
    if a.emit_curves {
        doc.curves = Some(Curves {
            roc: output::points(&roc),
            cap: Some(output::points(&cap_curve(&sample))),
        });
    }
    Ok(Outcome { text: doc.to_json(), warnings: vec![] })
}

pub fn cmd_imputed(a: &ImputedArgs) -> Result<Outcome, CliError> {
    let table = input::read_grades(&a.input)?;
    let roc = imputed_roc(&table)?;
    if a.output.format == Some(Format::Csv) {
        return Ok(Outcome { text: curve_csv(&roc), warnings: vec![] });
    }
    let report = imputed_report(&table)?;
    let mut doc = Document::from_report(&report);
    doc.curves = Some(Curves { roc: output::points(&roc), cap: None });
    Ok(Outcome { text: doc.to_json(), warnings: vec![] })
}

pub fn cmd_analyze(a: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let bounds = lar_rar_bounds(a.ar)?;
    let t = trapezoid_decomposition(a.ar, a.lar, a.rar)?;
    let mut warnings = Vec::new();
    if t.cross_check_gap > CROSS_CHECK_TOL {
        warnings.push(format!(
            "multiplier cross-check gap {} exceeds {CROSS_CHECK_TOL}",
            t.cross_check_gap
        ));
    }
    let text = match a.output.format {
        Some(Format::Csv) => {
            let mut s = String::from("x,y\n");
            for (x, y) in t.vertices() {
                let _ = writeln!(s, "{},{}", fmt12(x), fmt12(y));
            }
            s
        }
        _ => {
            let mut doc = Document::new("analytic");
            doc.metrics = Some(output::Metrics {
                ar: output::round12(a.ar),
                lar: output::round12(a.lar),
                rar: output::round12(a.rar),
            });
            doc.decomposition = Some(Decomposition::new(&t, bounds));
            doc.to_json()
        }
    };
    Ok(Outcome { text, warnings })
}

fn parse_sweep(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let nums: Option<Vec<f64>> = parts.iter().map(|p| p.trim().parse().ok()).collect();
    match nums.as_deref() {
        Some(&[lo, hi, step]) => Ok(sweep_grid(lo, hi, step)?),
        _ => Err(CliError::input(format!("--sweep expects lo:hi:step, got '{spec}'"))),
    }
}

pub fn cmd_burgt(a: &BurgtArgs) -> Result<Outcome, CliError> {
    if !(a.tol > 0.0) {
        return Err(CliError::input(format!("--tol must be positive, got {}", a.tol)));
    }
    let (rows, sweep): (Vec<SweepRow>, bool) = if let Some(spec) = &a.sweep {
        (burgt_preference_sweep(&parse_sweep(spec)?, a.tol)?, true)
    } else if let Some(k) = a.k {
        (vec![burgt_row(k, a.tol)?], false)
    } else {
        let ar = a.ar.expect("clap requires one mode");
        let mut row = burgt_row(burgt_k(ar)?, a.tol)?;
        row.ar = ar;
        (vec![row], false)
    };
    let text = match a.output.format {
        Some(Format::Json) => {
            let mut doc = Document::new("burgt");
            doc.rows = Some(rows.iter().map(SweepOut::from).collect());
            doc.to_json()
        }
        _ if sweep => {
            let mut s = String::from("ar,k,lar,rar,min_bound,max_bound\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    fmt12(r.ar),
                    fmt12(r.k),
                    fmt12(r.lar),
                    fmt12(r.rar),
                    fmt12(r.min_bound),
                    fmt12(r.max_bound)
                );
            }
            s
        }
        _ => {
            let r = &rows[0];
            format!("k,ar,lar,rar\n{},{},{},{}\n", fmt12(r.k), fmt12(r.ar), fmt12(r.lar), fmt12(r.rar))
        }
    };
    Ok(Outcome { text, warnings: vec![] })
}

/// Reads a report written by `binary` or `imputed` and checks its tag.
pub fn read_report(path: &Path, expected: Source) -> Result<MetricReport, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let doc: Document = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("{}: not a report: {e}", path.display())))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(CliError::input(format!(
            "{}: schema_version {} is not supported (expected {SCHEMA_VERSION})",
            path.display(),
            doc.schema_version
        )));
    }
    let tag = match expected {
        Source::Binary => "binary",
        Source::Imputed => "imputed",
    };
    if doc.source != tag {
        return Err(CliError::input(format!(
            "{}: expected a {tag} report, found source '{}'",
            path.display(),
            doc.source
        )));
    }
    let missing = |what: &str| CliError::input(format!("{}: report has no {what}", path.display()));
    let m = doc.metrics.ok_or_else(|| missing("metrics"))?;
    let s = doc.sigma_ar.ok_or_else(|| missing("sigma_ar"))?;
    let c = doc.counts.ok_or_else(|| missing("counts"))?;
    Ok(MetricReport {
        source: expected,
        ar: m.ar,
        lar: m.lar,
        rar: m.rar,
        sigma_ar: s.exact,
        sigma_ar_simplified: s.simplified,
        n_nondefault: c.n,
        n_default: c.d,
    })
}

pub fn cmd_validate(a: &ValidateArgs) -> Result<Outcome, CliError> {
    if a.output.format == Some(Format::Csv) {
        return Err(CliError::input("validate writes JSON only"));
    }
    let binary = read_report(&a.binary, Source::Binary)?;
    let imputed = read_report(&a.imputed, Source::Imputed)?;
    let v = validate(&binary, &imputed, a.z, a.band)?;
    let mut doc = Document::new("validation");
    doc.verdict = Some(Verdict::from(&v));
    Ok(Outcome { text: doc.to_json(), warnings: vec![] })
}
