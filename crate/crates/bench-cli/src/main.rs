//! Benchmark harness for approximate edit distances.
//!
//! Wires the dataset tooling, the six approximation algorithms, and the
//! distortion analytics into reproducible CSV artifacts. Subcommands:
//!
//! - `gen-random`    synthesize a seeded random pair file
//! - `ingest-fasta`  bucket a FASTA corpus and sample a pair file
//! - `bench`         compute empirical distortions over a pair file
//! - `theory`        evaluate closed-form distortion curves
//! - `best`          summarize winners across results files
//! - `dump-ratios`   recompute distortions from a per-pair dump
//!
//! Every run is deterministic given its flags and seed; CSV outputs are
//! byte-stable across repeats and thread counts (opt-in timing being the
//! documented exception). Exit codes: 0 success, 2 usage error, 3 data
//! error, 4 internal error.

mod commands;
mod config;
mod errors;
mod format;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use errors::CliResult;

#[derive(Parser)]
#[command(name = "editdist-bench", version, about = "Reproducible benchmarks for approximate edit distances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a seeded random pair file.
    GenRandom(commands::gen_random::Args),
    /// Bucket a FASTA corpus and sample a pair file.
    IngestFasta(commands::ingest_fasta::Args),
    /// Compute empirical distortions over a pair file.
    Bench(commands::bench::Args),
    /// Evaluate closed-form distortion curves over a length grid.
    Theory(commands::theory::Args),
    /// Summarize the best algorithm per (sigma, n, edits) cell.
    Best(commands::best::Args),
    /// Recompute distortions from a per-pair ratio dump.
    DumpRatios(commands::dump_ratios::Args),
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::GenRandom(args) => commands::gen_random::run(args),
        Command::IngestFasta(args) => commands::ingest_fasta::run(args),
        Command::Bench(args) => commands::bench::run(args),
        Command::Theory(args) => commands::theory::run(args),
        Command::Best(args) => commands::best::run(args),
        Command::DumpRatios(args) => commands::dump_ratios::run(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
