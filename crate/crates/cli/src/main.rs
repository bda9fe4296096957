mod bfile;
mod compute;
mod render;
mod report;
mod table;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "torus-ideals", version, about = "Exact ideal-count polynomials, Chebyshev families and their identities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Upper bound on n for tables and sweeps (each command has its own default).
    #[arg(long, global = true)]
    max_n: Option<u64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one polynomial or factorization, or its value at an integer.
    Compute {
        #[arg(value_enum)]
        object: compute::Object,
        /// Row index n >= 1. For fpoly this selects F_{n-1}, the companion of Pg_n.
        #[arg(long, required_unless_present = "k", conflicts_with = "k")]
        n: Option<u64>,
        /// Direct index k >= 0 of T_k or F_k.
        #[arg(long)]
        k: Option<u64>,
        /// Evaluate at this integer instead of printing the polynomial.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
    },
    /// Reproduce a table.
    Table {
        #[arg(value_enum)]
        which: table::TableKind,
        /// Evaluation points for `values`.
        #[arg(long = "N", value_delimiter = ',', allow_hyphen_values = true, default_value = "3,4,5")]
        points: Vec<i64>,
        /// Evaluation point for `bfile`.
        #[arg(long, allow_hyphen_values = true, default_value_t = 4)]
        at: i64,
    },
    /// Run an invariant sweep; exit status 1 if anything fails.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
    },
    /// Compare a sequence against an OEIS b-file.
    ///
    /// SEQUENCE is one of pg3, pg_eval N, pg_abs N, f_eval N, sigma,
    /// odd_div_count, followed by the b-file path.
    OeisCheck {
        sequence: String,
        #[arg(num_args = 1..=2, allow_hyphen_values = true, value_names = ["N", "BFILE"])]
        rest: Vec<String>,
    },
}

/// Failure classes that map to exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Invalid(String),
}

pub struct Output {
    pub body: String,
    pub failed: bool,
}

impl Output {
    pub fn ok(body: String) -> Self {
        Self { body, failed: false }
    }
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Compute { object, n, k, eval } => compute::run(object, compute::Index::from_args(n, k), eval, cli.format),
        Command::Table { which, points, at } => table::run(which, cli.max_n, &points, at, cli.format),
        Command::Verify { suite } => Ok(verify::run(suite, cli.max_n, cli.format)),
        Command::OeisCheck { sequence, rest } => bfile::run(&sequence, &rest, cli.max_n, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = cli.out.clone();
    let output = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match out {
        Some(path) => fs::write(&path, &output.body)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(output.body.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if output.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
