//! codedist: exact distance invariants of linear codes over finite
//! fields, in the Hamming, rank, and sum-rank metrics.
//!
//! Subcommands: `invariants` computes distances, greedy distances, radii,
//! maximality, attained weights, extensions, and bounds of one code;
//! `compare` proves two codes inequivalent or says it cannot; `construct`
//! writes code files for the bundled constructions; `partial` reports
//! partial distances and the exponent of a kernel matrix; `goldens` runs
//! the bundled golden-value suite.
//!
//! Exit codes: 0 success (for `compare`: inequivalence proven), 1 usage
//! or parse failure, 2 a resource wall (budget, level-set cap, counter
//! overflow), 3 `compare` found no distinguishing invariant. Reports go
//! to stdout, diagnostics to stderr.

use clap::{Parser, Subcommand};
use codedist_cli::commands::{self, compare, construct, goldens, invariants, partial};
use codedist_cli::config::{self, RunConfig};
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "codedist",
    version,
    about = "Exact distance invariants of linear codes in the Hamming, rank, and sum-rank metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants of one code file.
    Invariants(invariants::InvariantsArgs),
    /// Compare two codes invariant by invariant.
    Compare(compare::CompareArgs),
    /// Build a named construction and write its code file.
    Construct(construct::ConstructArgs),
    /// Partial distances and exponent of a kernel matrix.
    Partial(partial::PartialArgs),
    /// Recompute the bundled golden values and report mismatches.
    Goldens(goldens::GoldensArgs),
}

fn common_of(command: &Command) -> &config::CommonOpts {
    match command {
        Command::Invariants(args) => &args.common,
        Command::Compare(args) => &args.common,
        Command::Construct(args) => &args.kind.io().common,
        Command::Partial(args) => &args.common,
        Command::Goldens(args) => &args.common,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version displays are successes; real parse errors
            // exit 1 under the CLI's own exit-code contract.
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    let cfg = match RunConfig::resolve(common_of(&cli.command)) {
        Ok(cfg) => cfg,
        Err(message) => {
            eprintln!("codedist: {message}");
            return ExitCode::from(commands::EXIT_USAGE);
        }
    };

    let outcome = match &cli.command {
        Command::Invariants(args) => invariants::run(args, &cfg),
        Command::Compare(args) => compare::run(args, &cfg),
        Command::Construct(args) => construct::run(args, &cfg),
        Command::Partial(args) => partial::run(args, &cfg),
        Command::Goldens(args) => goldens::run(args, &cfg),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("codedist: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
