use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use grpdfrob::cli::{self, CliError, Direction, RunReport, DEFAULT_SEED};

/// Groupoid Frobenius algebras and Frobenius objects over groupoid doubles,
/// checked in exact rational arithmetic.
#[derive(Parser)]
#[command(name = "grpdfrob", version)]
struct Args {
    /// Print the report as JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Where to write the constructed structure (double, convert).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the groupoid laws of a groupoid file.
    Validate { path: PathBuf },
    /// Build the Drinfeld double of a groupoid and check it.
    Double { path: PathBuf },
    /// Check a quantum groupoid (or double) file against the weak Hopf axioms.
    CheckWha { path: PathBuf },
    /// Check a groupoid Frobenius algebra file.
    CheckGfa { path: PathBuf },
    /// Check a Frobenius object file, including conditions (1) and (2).
    CheckFrobenius { path: PathBuf },
    /// Convert between the two descriptions.
    Convert {
        #[arg(value_enum)]
        direction: Dir,
        path: PathBuf,
    },
    /// GFA → Frobenius object → GFA, compared entry by entry.
    Roundtrip { path: PathBuf },
    /// Run the full pipeline on a built-in fixture, or on all of them.
    Demo { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    GfaToFrob,
    FrobToGfa,
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Double { .. } => "double",
        Command::CheckWha { .. } => "check-wha",
        Command::CheckGfa { .. } => "check-gfa",
        Command::CheckFrobenius { .. } => "check-frobenius",
        Command::Convert { .. } => "convert",
        Command::Roundtrip { .. } => "roundtrip",
        Command::Demo { .. } => "demo",
    }
}

fn run(args: &Args) -> Result<RunReport, CliError> {
    let out = args.out.as_deref();
    match &args.command {
        Command::Validate { path } => cli::validate(path),
        Command::Double { path } => cli::double(path, out),
        Command::CheckWha { path } => cli::check_wha(path),
        Command::CheckGfa { path } => cli::check_gfa_file(path),
        Command::CheckFrobenius { path } => cli::check_frobenius_file(path),
        Command::Convert { direction, path } => {
            let d = match direction {
                Dir::GfaToFrob => Direction::GfaToFrob,
                Dir::FrobToGfa => Direction::FrobToGfa,
            };
            cli::convert(path, d, out)
        }
        Command::Roundtrip { path } => cli::roundtrip(path),
        Command::Demo { name } => cli::demo(name, args.seed),
    }
}

fn main() -> anyhow::Result<ExitCode> {
    let args = Args::parse();
    if let Err(e) = cli::configure_threads() {
        eprintln!("error: {e}");
        return Ok(ExitCode::from(cli::EXIT_INPUT_ERROR as u8));
    }
    let report = run(&args).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        RunReport::input_error(name(&args.command), &e)
    });
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).context("serializing report")?);
    } else {
        println!("{report}");
    }
    Ok(ExitCode::from(report.exit_code as u8))
}
