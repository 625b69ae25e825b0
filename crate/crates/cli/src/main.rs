mod cache;
mod commands;
mod error;
mod input;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{BoundArgs, ComputeArgs, FixturesArgs, ParseArgs, SearchArgs};

/// Twisted Alexander polynomials, finite quotients and complexity bounds.
#[derive(Parser, Debug)]
#[command(name = "twistal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute twisted Alexander polynomials.
    Alex(ComputeArgs),
    /// Enumerate homomorphisms onto finite groups.
    Search(SearchArgs),
    /// Lower bounds, monicity verdict and fibering summary.
    Bound(BoundArgs),
    /// Write the bundled example files.
    Fixtures(FixturesArgs),
    /// Convert between input formats.
    Parse(ParseArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Alex(a) => commands::alex(a),
        Command::Search(a) => commands::search(a),
        Command::Bound(a) => commands::bound(a),
        Command::Fixtures(a) => commands::write_fixtures(a),
        Command::Parse(a) => commands::convert(a),
    };
    match out {
        Ok(text) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(io::stdout().lock(), "{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
