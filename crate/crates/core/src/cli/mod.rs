//! Command-line front end: `hslink [--registry PATH] <analyze|batch|scan|registry>`.
//!
//! Exit codes: 0 success, 1 validation error, 2 failed consistency check,
//! 3 I/O error.

pub mod parse;
pub mod render;

use std::ffi::OsString;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::{characteristic_divisor, middle_betti, milnor_number};
use crate::poly::{divisibility_condition, is_well_formed_space, quasi_degree, WeightSystem, WeightedPolynomial, Weights};
use crate::registry::Registry;
use crate::report::{analyze_with, AnalysisOptions};

pub use parse::{parse_polynomial, ParsedPolynomial};
pub use render::{render_json, render_json_line, render_text, ReportJson};

/// Largest `--max-weight` accepted by `scan`.
pub const SCAN_CEILING: u64 = 256;

#[derive(Debug, Parser)]
#[command(name = "hslink", version, about = "Invariants of links of weighted-homogeneous hypersurface singularities")]
struct Cli {
    /// Registry file (line-delimited JSON) replacing the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one polynomial.
    Analyze {
        /// Comma-separated weights, e.g. 9,15,17,20
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weights: Vec<i64>,
        /// Polynomial expression, e.g. "z0^5*z1 + z0*z2^3 + z1^4 + z3^3"
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        assume_isolated: bool,
    },
    /// Analyze every line of a JSONL file of {"weights","degree","poly"} records.
    Batch {
        path: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Enumerate well-formed weight systems of a given Fano index.
    Scan {
        #[arg(long)]
        max_weight: u64,
        #[arg(long, default_value_t = 1)]
        index: u64,
        #[arg(long, default_value_t = 4)]
        vars: usize,
    },
    /// Print the active registry.
    Registry,
}

pub fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::ConsistencyFailure { .. } => 2,
        Error::Io(_) => 3,
        _ => 1,
    }
}

/// Builds the polynomial from raw weights and an expression. The degree is
/// inferred from the support and checked against `degree` when given.
pub fn build_polynomial(weights: &[i64], expr: &str, degree: Option<u64>) -> Result<(WeightedPolynomial, Vec<String>)> {
    let w = crate::poly::validate_weights(weights)?;
    let parsed = parse_polynomial(expr, Some(w.as_slice().len()))?;
    let f = match degree {
        Some(d) => WeightedPolynomial::with_degree(parsed.support, &WeightSystem::from_raw(w.as_slice(), d)?)?,
        None => quasi_degree(parsed.support, &w)?,
    };
    Ok((f, parsed.warnings))
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let registry = match &cli.registry {
        Some(path) => Registry::load(path)?,
        None => Registry::builtin(),
    };
    match cli.command {
        Command::Analyze {
            weights,
            poly,
            format,
            assume_isolated,
        } => {
            let (f, warnings) = build_polynomial(&weights, &poly, None)?;
            for w in warnings {
                writeln!(stderr, "warning: {w}")?;
            }
            let options = AnalysisOptions {
                assume_isolated,
                ..AnalysisOptions::default()
            };
            let report = analyze_with(&f, &registry, options)?;
            let text = match format {
                Format::Text => render_text(&report),
                Format::Json => render_json(&report)? + "\n",
            };
            stdout.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Batch { path, out } => {
            let summary = match out {
                Some(file) => {
                    let mut w = std::io::BufWriter::new(std::fs::File::create(file)?);
                    let s = run_batch(&path, &registry, &mut w, stderr)?;
                    w.flush()?;
                    s
                }
                None => run_batch(&path, &registry, stdout, stderr)?,
            };
            writeln!(stderr, "{}", serde_json::to_string(&summary).expect("summary serializes"))?;
            Ok(0)
        }
        Command::Scan {
            max_weight,
            index,
            vars,
        } => {
            run_scan(max_weight, index, vars, |row| {
                let line = serde_json::to_string(row).expect("scan rows serialize");
                writeln!(stdout, "{line}").map_err(Error::from)
            })?;
            Ok(0)
        }
        Command::Registry => {
            stdout.write_all(registry.to_jsonl().as_bytes())?;
            Ok(0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct BatchRecord {
    weights: Vec<i64>,
    degree: u64,
    poly: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub ok: usize,
    pub skipped: usize,
    pub failed: usize,
}

enum LineOutcome {
    Blank,
    Skipped(String),
    Failed(Error),
    Ok(String),
}

fn batch_line(line: &str, registry: &Registry) -> LineOutcome {
    if line.trim().is_empty() {
        return LineOutcome::Blank;
    }
    let record: BatchRecord = match serde_json::from_str(line) {
        Ok(r) => r,
        Err(e) => return LineOutcome::Skipped(e.to_string()),
    };
    let result = build_polynomial(&record.weights, &record.poly, Some(record.degree))
        .and_then(|(f, _)| analyze_with(&f, registry, AnalysisOptions::default()))
        .and_then(|r| render_json_line(&r));
    match result {
        Ok(json) => LineOutcome::Ok(json),
        Err(e) => LineOutcome::Failed(e),
    }
}

/// Lines are analyzed in parallel in chunks; reports are written in input order.
pub fn run_batch(path: &Path, registry: &Registry, out: &mut dyn Write, diag: &mut dyn Write) -> Result<BatchSummary> {
    const CHUNK: usize = 256;
    let reader = BufReader::new(std::fs::File::open(path)?);
    let mut summary = BatchSummary::default();
    let mut lines = reader.lines().enumerate();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for (i, line) in lines.by_ref().take(CHUNK) {
            chunk.push((i + 1, line?));
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<(usize, LineOutcome)> = chunk
            .par_iter()
            .map(|(no, line)| (*no, batch_line(line, registry)))
            .collect();
        for (no, outcome) in outcomes {
            match outcome {
                LineOutcome::Blank => {}
                LineOutcome::Skipped(msg) => {
                    summary.skipped += 1;
                    writeln!(diag, "line {no}: skipped: {msg}")?;
                }
                LineOutcome::Failed(e) => {
                    summary.failed += 1;
                    writeln!(diag, "line {no}: failed: {e}")?;
                }
                LineOutcome::Ok(json) => {
                    summary.ok += 1;
                    writeln!(out, "{json}")?;
                }
            }
        }
    }
    Ok(summary)
}

/// Exact rational, `{"num": .., "den": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i128,
    pub den: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub weights: Vec<u64>,
    pub degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor_number: Option<u64>,
    /// The formal value of `∏(d/w_i - 1)` when it is not an integer.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor_rational: Option<RationalJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<u64>,
}

fn formal_milnor(weights: &[u64], d: u64) -> RationalJson {
    let (mut num, mut den) = (1i128, 1i128);
    for &w in weights {
        num *= (d - w) as i128;
        den *= w as i128;
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }
    RationalJson { num, den }
}

fn scan_row(weights: &[u64], d: u64) -> Result<ScanRow> {
    let formal = formal_milnor(weights, d);
    let mut row = ScanRow {
        weights: weights.to_vec(),
        degree: d,
        milnor_number: None,
        milnor_rational: None,
        b2: None,
    };
    if formal.den != 1 {
        row.milnor_rational = Some(formal);
        return Ok(row);
    }
    let ws = WeightSystem::from_raw(weights, d)?;
    row.milnor_number = Some(milnor_number(&ws)?);
    if let Ok(div) = characteristic_divisor(&ws) {
        row.b2 = middle_betti(&div).ok();
    }
    Ok(row)
}

/// Nondecreasing weight tuples up to `max_weight` that are normalized and
/// well-formed, with `d = |w| - index > max w` satisfying the divisibility
/// condition. Rows are produced in lexicographic order.
pub fn run_scan<F>(max_weight: u64, index: u64, vars: usize, mut emit: F) -> Result<()>
where
    F: FnMut(&ScanRow) -> Result<()>,
{
    if max_weight > SCAN_CEILING {
        return Err(Error::BoundExceeded {
            value: max_weight,
            bound: SCAN_CEILING,
        });
    }
    if vars < 2 {
        return Err(Error::TooFewWeights(vars));
    }
    if max_weight == 0 {
        return Ok(());
    }
    let mut w = vec![1u64; vars];
    loop {
        let total: u64 = w.iter().sum();
        if total > index {
            let d = total - index;
            if d > w[vars - 1] && crate::poly::gcd_all(&w) == 1 {
                let weights = Weights::new(&w)?;
                if is_well_formed_space(&weights) {
                    let ws = WeightSystem::from_raw(&w, d)?;
                    if divisibility_condition(&ws) {
                        emit(&scan_row(&w, d)?)?;
                    }
                }
            }
        }
        // next nondecreasing tuple
        let Some(k) = (0..vars).rev().find(|&k| w[k] < max_weight) else {
            return Ok(());
        };
        w[k] += 1;
        for j in k + 1..vars {
            w[j] = w[k];
        }
    }
}
