//! `braided`: verification suites and exact computations from the command
//! line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on
//! input errors.

mod commands;
mod presets;
mod report;
mod rfile;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use braided_core::exact::ParseError;
use braided_core::quantize::RadiusConvention;
use braided_core::ExecMode;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::Report;

#[derive(Debug, Serialize, thiserror::Error)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputError {
    #[error("{context}: parse error{}: {message}", location(*.line, *.column))]
    Parse { context: String, line: Option<usize>, column: Option<usize>, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
}

fn location(line: Option<usize>, column: Option<usize>) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
        (None, Some(c)) => format!(" at column {c}"),
        _ => String::new(),
    }
}

impl InputError {
    fn expr(what: &str, e: ParseError) -> Self {
        InputError::Parse { context: what.into(), line: None, column: Some(e.pos + 1), message: e.msg }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    /// r̂² = Cas + ℏ²/4
    PlusQuarter,
    /// r̂² = Cas − ℏ²/4
    MinusQuarter,
}

#[derive(Parser)]
#[command(name = "braided", version, about = "Exact computations in braided algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

/// A braiding from an R-matrix file or a preset
/// (`flip:d`, `std:d=2`, `superflip:m|n`).
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// R-matrix file (JSON).
    file: Option<PathBuf>,
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Yang–Baxter, Hecke, skew-invertibility and extension checks.
    VerifyBraiding {
        #[command(flatten)]
        source: Source,
        /// Value substituted for q in the matrix and the Hecke parameter.
        #[arg(long)]
        q: Option<String>,
    },
    /// Symmetrizer dimensions and the rational form of the Poincaré series.
    PhSeries {
        #[command(flatten)]
        source: Source,
        #[arg(long, env = "BRAIDED_KMAX", default_value_t = 4)]
        kmax: usize,
    },
    /// Apply an operator in `uu2`, `weyl:<braiding>` or `ugl:m`.
    Act {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        op: String,
        /// An element, or `f(t,mu) : k=n` for isotypic data in `uu2`.
        #[arg(long)]
        on: String,
    },
    /// The quantum Laplace–Beltrami operator of `φ(r)` on component `k`.
    Lb {
        #[arg(long)]
        phi: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// `f(t, mu)` to apply the difference operator to.
        #[arg(long)]
        apply: Option<String>,
        #[arg(long, value_enum, default_value_t = Convention::PlusQuarter)]
        convention: Convention,
    },
}

fn run(cli: &Cli, report: &mut Report) -> Result<(), InputError> {
    let mode = if cli.sequential { ExecMode::Sequential } else { ExecMode::Parallel };
    match &cli.command {
        Command::VerifyBraiding { source, q } => commands::verify_braiding(report, source, q.as_deref()),
        Command::PhSeries { source, kmax } => commands::ph(report, source, *kmax, mode),
        Command::Act { algebra, op, on } => commands::act(report, algebra, op, on),
        Command::Lb { phi, k, apply, convention } => {
            let conv = match convention {
                Convention::PlusQuarter => RadiusConvention::PlusQuarter,
                Convention::MinusQuarter => RadiusConvention::MinusQuarter,
            };
            commands::lb(report, phi, *k, apply.as_deref(), conv)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = Report::new(std::env::args().skip(1).collect());
    match run(&cli, &mut report) {
        Ok(()) => {
            report.elapsed_ms = start.elapsed().as_millis();
            match cli.format {
                Format::Text => print!("{}", report.text()),
                Format::Structured => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Structured => {
                    println!("{}", serde_json::to_string_pretty(&serde_json::json!({ "error": e })).expect("serializes"))
                }
            }
            ExitCode::from(2)
        }
    }
}
