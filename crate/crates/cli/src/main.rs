//! `cevian`: count, verify, tabulate, scan and render cevian arrangements.

mod commands;
mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::CliError;

#[derive(Parser)]
#[command(
    name = "cevian",
    version,
    about = "Exact triangle counting in cevian arrangements",
    after_help = "Exit codes: 0 success, 1 validation error, 2 internal consistency failure, 3 I/O error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Count triangles in an arrangement, optionally verifying against the
    /// brute-force enumerator
    Count(CountArgs),
    /// Tabulate d(n) and triangle counts for equal divisions over a range
    Table(TableArgs),
    /// Scan a prime family for equal-division concurrencies
    Scan(ScanArgs),
    /// Render an arrangement as deterministic SVG
    Render(RenderArgs),
    /// Emit concurrency sequences
    Seq(SeqArgs),
    /// Count triangles in a fan-and-parallels figure
    Fan(FanArgs),
}

/// Exactly one of: --equal, --config, or inline --a/--b/--c lists.
#[derive(Args)]
pub struct SourceArgs {
    /// Equal division: n-1 cevians per vertex with feet at i/n
    #[arg(long, value_name = "N")]
    pub equal: Option<u64>,

    /// Config file with feet_a/feet_b/feet_c lists
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Feet of the A-cevians on side BC, as fractions (e.g. 1/3,1/2)
    #[arg(long, value_name = "FRACTIONS", value_delimiter = ',')]
    pub a: Vec<String>,

    /// Feet of the B-cevians on side CA
    #[arg(long, value_name = "FRACTIONS", value_delimiter = ',')]
    pub b: Vec<String>,

    /// Feet of the C-cevians on side AB
    #[arg(long, value_name = "FRACTIONS", value_delimiter = ',')]
    pub c: Vec<String>,
}

#[derive(Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Also run the brute-force enumerator and check agreement
    #[arg(long)]
    pub oracle: bool,

    /// Emit the report as JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct TableArgs {
    /// Inclusive range of division counts n
    #[arg(long = "equal-range", num_args = 2, value_names = ["N_MIN", "N_MAX"], required = true)]
    pub equal_range: Vec<u64>,

    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
pub struct ScanArgs {
    /// Family 1: n = p(2p-1); family 2: n = p^2(2p+1)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub family: u8,

    /// Scan all qualifying primes p up to this bound
    #[arg(long = "p-max", value_name = "P")]
    pub p_max: u64,

    /// Count all solutions per member instead of stopping at the first
    #[arg(long = "count-all")]
    pub count_all: bool,
}

#[derive(Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Output path; stdout when omitted
    #[arg(long, value_name = "FILE.svg")]
    pub out: Option<PathBuf>,

    /// none | all-triangles | triple:<seg>,<seg>,<seg> (labels like A0 or ids)
    #[arg(long, default_value = "none")]
    pub highlight: String,
}

#[derive(Args)]
pub struct SeqArgs {
    #[arg(long, value_enum)]
    pub name: SeqName,

    /// Largest n to emit
    #[arg(long, value_name = "L")]
    pub limit: u64,

    #[arg(long, value_enum, default_value_t = SeqFormat::Lines)]
    pub format: SeqFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    /// d(n) for n = 2..limit
    #[value(name = "d-of-n")]
    DOfN,
    /// odd n <= limit with at least one concurrency
    #[value(name = "odd-positive")]
    OddPositive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqFormat {
    Lines,
    Json,
}

#[derive(Args)]
pub struct FanArgs {
    /// Lines through the apex, the two triangle sides included (>= 2)
    #[arg(long, value_name = "P")]
    pub apex: u64,

    /// Lines parallel to the base, the base included (>= 1)
    #[arg(long, value_name = "R")]
    pub parallel: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Oracle guard override, in segments.
pub const MAX_SEGMENTS_ENV: &str = "CEVIAN_MAX_SEGMENTS";

/// Segment limit for enumeration: the default guard unless the environment
/// overrides it.
pub fn segment_limit() -> Result<usize, CliError> {
    match std::env::var(MAX_SEGMENTS_ENV) {
        Ok(value) => value.trim().parse().map_err(|_| {
            CliError::Validation(format!(
                "{MAX_SEGMENTS_ENV} must be a nonnegative integer, got {value:?}"
            ))
        }),
        Err(_) => Ok(cevian_core::oracle::DEFAULT_SEGMENT_LIMIT),
    }
}
