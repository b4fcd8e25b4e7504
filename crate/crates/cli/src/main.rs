//! Exact q,t enumeration, statistics, bijections, and verification for
//! decorated parallelogram polyominoes, partially labelled paths, and
//! two-car parking functions.

mod commands;
mod error;
mod verify;
mod wire;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser)]
#[command(
    name = "polyqt",
    version,
    about = "Exact q,t enumeration and verification for decorated polyominoes, \
             labelled paths, and two-car parking functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a family at the given sizes.
    Enumerate(commands::EnumerateArgs),
    /// Compute the statistics of one serialized object.
    Stats(commands::StatsArgs),
    /// Apply a bijection to one serialized object.
    Map(commands::MapArgs),
    /// Evaluate a q,t enumerator by exhaustive summation.
    Enumerator(commands::EnumeratorArgs),
    /// Evaluate the bounce recursion.
    Recursion(commands::RecursionArgs),
    /// Check two computation routes against each other.
    Verify(verify::VerifyArgs),
    /// Run the pinned regression suite.
    Selftest(commands::SelftestArgs),
}

/// Report rendering selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable lines.
    Text,
    /// One machine-readable document.
    Json,
    /// Comma-separated rows, where the verb defines a table.
    Csv,
}

/// Output destination and format, shared by every subcommand.
#[derive(Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
    /// Write the report to this file instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    /// Emits a fully rendered report.
    pub fn emit(&self, content: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => std::fs::write(path, content.as_bytes())?,
            None => print!("{content}"),
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one subcommand; the boolean is the verification verdict (always
/// true for commands that only compute).
fn dispatch(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Enumerate(args) => commands::enumerate(&args).map(|()| true),
        Command::Stats(args) => commands::stats(&args).map(|()| true),
        Command::Map(args) => commands::map(&args).map(|()| true),
        Command::Enumerator(args) => commands::enumerator(&args).map(|()| true),
        Command::Recursion(args) => commands::recursion(&args).map(|()| true),
        Command::Verify(args) => verify::run(&args),
        Command::Selftest(args) => commands::selftest(&args),
    }
}
