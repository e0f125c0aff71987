//! `cmult`: generate discrimination conditions, classify polynomials,
//! reproduce size tables, run verification suites and time generation.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use cmult::discriminate::{ConditionSet, GenOptions, Method};
use cmult::evaluate::{classify, classify_with};
use cmult::metrics::{bench, counts_csv, generate, maxdeg_csv, BenchRow};
use cmult::oracle::{run_suite, Suite};
use cmult::parse::{parse_coeff_list, parse_numeric};
use cmult::partitions::CompletePartition;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cmult", version, about = "Complete multiplicity structures of univariate polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Counts,
    Maxdeg,
}

#[derive(clap::Args)]
struct GenFlags {
    /// Fix the leading coefficient to 1.
    #[arg(long)]
    monic: bool,
    /// Fix coefficient a_k to zero (repeatable).
    #[arg(long = "drop-coeff", value_name = "K")]
    drop_coeff: Vec<usize>,
    /// Use P^(k)/k! in the derivative tower (the default).
    #[arg(long, conflicts_with = "raw_derivatives")]
    scaled_derivatives: bool,
    /// Use plain derivatives P^(k).
    #[arg(long)]
    raw_derivatives: bool,
    /// Worker threads for the registry fill.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Give up after this many seconds.
    #[arg(long, value_name = "SECS")]
    timeout: Option<f64>,
}

impl GenFlags {
    fn options(&self) -> GenOptions {
        GenOptions {
            scaled: !self.raw_derivatives,
            monic: self.monic,
            drop: self.drop_coeff.clone(),
            threads: self.threads.max(1),
            deadline: self.timeout.map(|s| Instant::now() + Duration::from_secs_f64(s)),
            ..GenOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate the condition for every complete multiplicity structure.
    Gen {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value = "qxy")]
        method: String,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        flags: GenFlags,
    },
    /// Classify a polynomial with rational coefficients.
    Classify {
        /// Ascending coefficients `c0,c1,...,cn`.
        #[arg(long, conflicts_with = "expr", allow_hyphen_values = true)]
        poly: Option<String>,
        /// An expression in `x`, e.g. `(x-1)^2*(x^2+1)`.
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        /// Evaluate a generated condition file instead of the direct pipeline.
        #[arg(long)]
        conditions: Option<PathBuf>,
    },
    /// Print a CSV size table.
    Table {
        #[arg(long, value_enum)]
        metric: Metric,
        /// Inclusive range `a..b`.
        #[arg(long, value_name = "A..B")]
        n_range: String,
        /// Per-cell generation budget for measured columns, in seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
    },
    /// Run a seeded verification suite.
    Verify {
        /// icgcd | appendixB | prem | vandermonde | yhz-roots | cross-method | exclusivity
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time symbolic generation (median of repetitions), CSV on stdout.
    Bench {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "qxy")]
        method: String,
        #[arg(long, default_value_t = 1)]
        repetitions: usize,
        #[command(flatten)]
        flags: GenFlags,
    },
}

struct Failure {
    code: u8,
    err: anyhow::Error,
}

fn usage(err: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 2, err: err.into() }
}

fn failed(err: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 1, err: err.into() }
}

/// Input-shaped library errors are usage errors; the rest are failures.
fn lib(err: cmult::Error) -> Failure {
    match err {
        cmult::Error::Invalid(_) | cmult::Error::Parse(_) | cmult::Error::ConstantBase | cmult::Error::ZeroPolynomial => {
            usage(err)
        }
        other => failed(other),
    }
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| usage(anyhow!("range must look like a..b, got {s:?}")))?;
    let a: usize = a.trim().parse().map_err(|_| usage(anyhow!("bad range start {a:?}")))?;
    let b: usize = b.trim().parse().map_err(|_| usage(anyhow!("bad range end {b:?}")))?;
    if a < 2 || a > b {
        return Err(usage(anyhow!("range {s:?} must satisfy 2 <= a <= b")));
    }
    Ok(a..=b)
}

/// `{"real":[..],"imag":[..]}` with the real part first.
fn verdict_json(mu_c: &CompletePartition) -> String {
    format!("{{\"real\":{},\"imag\":{}}}", json!(mu_c.real), json!(mu_c.imag))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())).map_err(failed),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(failed)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Gen { degree, format: Format::Json, method, out, flags } => {
            if degree < 2 {
                return Err(usage(anyhow!("degree must be at least 2")));
            }
            let method: Method = method.parse().map_err(lib)?;
            let cs = generate(degree, method, &flags.options()).map_err(lib)?;
            let mut text = serde_json::to_string_pretty(&cs.to_json()).map_err(failed)?;
            text.push('\n');
            emit(out.as_ref(), &text)
        }
        Cmd::Classify { poly, expr, conditions } => {
            let p = match (poly, expr) {
                (Some(s), None) => parse_coeff_list(&s),
                (None, Some(s)) => parse_numeric(&s),
                _ => return Err(usage(anyhow!("give exactly one of --poly or --expr"))),
            }
            .map_err(lib)?;
            let verdict = match conditions {
                None => classify(&p).map_err(lib)?,
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))
                        .map_err(usage)?;
                    let v: serde_json::Value = serde_json::from_str(&text).map_err(usage)?;
                    let cs = ConditionSet::from_json(&v).map_err(lib)?;
                    classify_with(&cs, &p).map_err(lib)?
                }
            };
            emit(None, &format!("{}\n", verdict_json(&verdict.mu_c)))
        }
        Cmd::Table { metric, n_range, timeout } => {
            let range = parse_range(&n_range)?;
            let text = match metric {
                Metric::Counts => {
                    if *range.end() > 120 {
                        return Err(usage(anyhow!("counts are tabulated up to n = 120")));
                    }
                    counts_csv(range)
                }
                Metric::Maxdeg => maxdeg_csv(range, Some(Duration::from_secs_f64(timeout))),
            };
            emit(None, &text)
        }
        Cmd::Verify { suite, trials, seed } => {
            let suite: Suite = suite.parse().map_err(lib)?;
            let report = run_suite(suite, trials, seed).map_err(lib)?;
            emit(None, &format!("{report}\n"))?;
            if report.ok() {
                Ok(())
            } else {
                Err(failed(anyhow!("{} of {} trials failed", report.trials - report.passed, report.trials)))
            }
        }
        Cmd::Bench { degree, method, repetitions, flags } => {
            if degree < 3 {
                return Err(usage(anyhow!("bench needs degree at least 3")));
            }
            let method: Method = method.parse().map_err(lib)?;
            let row: BenchRow = bench(degree, method, repetitions, &flags.options()).map_err(lib)?;
            emit(None, &format!("{}\n{}\n", BenchRow::CSV_HEADER, row.csv()))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, err }) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
