//! `cohrank` — exact cohomological rank functions from the command line.
//!
//! Exit codes: 0 success, 1 verification/evaluation failure, 2 usage or
//! parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cohrank::modelfile::load_model;
use cohrank::models::{builtin_catalog, Model};
use cohrank::rat::{format_decimal, format_rat, parse_rat, Rat};
use cohrank::regularity::{classify, max_critical_point};
use cohrank::sample::{export_samples, DEFAULT_DIGITS};
use cohrank::verify::run_verify;

#[derive(Parser)]
#[command(
    name = "cohrank",
    about = "Exact cohomological rank functions on polarized abelian varieties",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant suites over model files (or the built-in catalog).
    Verify {
        /// Model files to verify; defaults to the built-in catalog.
        #[arg(long = "model", value_name = "FILE")]
        models: Vec<PathBuf>,
    },
    /// Evaluate h^i at a rational point.
    Eval {
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        /// Cohomological degree i.
        #[arg(long)]
        i: usize,
        /// Rational point, e.g. 3/2 or -2.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
    },
    /// List the critical points of a model with degrees and indices.
    Critical {
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
    },
    /// Classify a point as IT(0) / M-regular / GV / not-GV.
    Classify {
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Export an evenly spaced sample table as CSV.
    Sample {
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        steps: u32,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
    },
    /// List the built-in catalog and the supported model-file kinds.
    ListModels,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum AppError {
    /// Bad input: unreadable or unparsable model file, bad rational, …
    Usage(String),
    /// A domain failure on valid input (unknown region, failed check, …).
    Run(String),
}

fn read_model(path: &Path) -> Result<Model, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?;
    load_model(&text).map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))
}

fn parse_point(s: &str) -> Result<Rat, AppError> {
    parse_rat(s).map_err(|e| AppError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Verify { models } => {
            let catalog: Vec<Model> = if models.is_empty() {
                builtin_catalog()
            } else {
                models
                    .iter()
                    .map(|p| read_model(p))
                    .collect::<Result<_, _>>()?
            };
            let outcome = run_verify(&catalog);
            print!("{}", outcome.report);
            if outcome.passed {
                println!("verify: all {} checks passed", outcome.report.len());
                Ok(ExitCode::SUCCESS)
            } else {
                let failed = outcome.report.failures().count();
                println!("verify: {failed} of {} checks FAILED", outcome.report.len());
                Ok(ExitCode::from(1))
            }
        }
        Command::Eval {
            model,
            i,
            x,
            digits,
        } => {
            let m = read_model(&model)?;
            let x = parse_point(&x)?;
            let v = m
                .family
                .evaluate(i, &x)
                .map_err(|e| AppError::Run(e.to_string()))?;
            println!("{} ≈ {}", format_rat(&v), format_decimal(&v, digits));
            Ok(ExitCode::SUCCESS)
        }
        Command::Critical { model, digits } => {
            let m = read_model(&model)?;
            let points = m.family.critical_points();
            if points.is_empty() {
                println!("no critical points");
            }
            for cp in &points {
                println!(
                    "x = {} ≈ {}  degree {}  index {}",
                    cp.location.describe(),
                    cp.location.decimal(digits),
                    cp.degree,
                    cp.index
                );
            }
            match max_critical_point(&m.family) {
                Ok(t) => println!("maximal critical point: {t}"),
                Err(e) => println!("maximal critical point: not determined ({e})"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { model, x } => {
            let m = read_model(&model)?;
            let x = parse_point(&x)?;
            let class = classify(&m.family, &x).map_err(|e| AppError::Run(e.to_string()))?;
            println!("{class}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample {
            model,
            i,
            from,
            to,
            steps,
            digits,
        } => {
            let m = read_model(&model)?;
            let lo = parse_point(&from)?;
            let hi = parse_point(&to)?;
            let table = export_samples(&m.family, i, &lo, &hi, steps)
                .map_err(|e| AppError::Run(e.to_string()))?;
            print!("{}", table.to_csv(digits));
            Ok(ExitCode::SUCCESS)
        }
        Command::ListModels => {
            println!("built-in catalog:");
            for m in builtin_catalog() {
                let fam = &m.family;
                println!(
                    "  {}  (kind {}, g = {}, chi_l = {}{})",
                    m.name,
                    m.spec.kind_name(),
                    fam.g(),
                    fam.chi_l(),
                    if fam.complete() { "" } else { ", partial" }
                );
            }
            println!("model-file kinds: line_bundle gv_subscheme product_be abel_jacobi theta_sum germ");
            Ok(ExitCode::SUCCESS)
        }
    }
}
