//! `ingest-fasta`: bucket a sequence corpus and sample a pair file.

use std::path::PathBuf;

use editdist_core::datasets::{ingest_fasta, sample_pairs, write_pairs, BucketSpec};

use crate::config::{resolve, resolve_required, Config};
use crate::errors::{data, usage, CliResult};

/// Reads a FASTA file, keeps the sequences that fall into the requested
/// length bucket (truncated to the bucket target), samples pairs of
/// distinct strings, and writes them as a pair file. Exact distances are
/// left uncached; `bench` computes them on demand.
#[derive(clap::Args, Debug)]
pub struct Args {
    /// FASTA input file.
    input: PathBuf,
    /// Length bucket target (100, 300, or 1000).
    #[arg(long)]
    bucket: Option<usize>,
    /// Number of pairs to sample.
    #[arg(long)]
    count: Option<usize>,
    /// Sampling seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output pair file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Key-value configuration file; flags win over its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

pub fn run(args: Args) -> CliResult<()> {
    let cfg = Config::load(args.config.as_deref())?;
    let bucket = resolve(args.bucket, &cfg, "bucket", 100)?;
    let count = resolve(args.count, &cfg, "count", 200)?;
    let seed = resolve(args.seed, &cfg, "seed", 0)?;
    let out: PathBuf = resolve_required(args.out, &cfg, "out")?;

    let bucket = BucketSpec::new(bucket).map_err(usage)?;
    let ingested = ingest_fasta(&args.input, &bucket)
        .map_err(|e| data(format!("{}: {e}", args.input.display())))?;
    let pairs = sample_pairs(&ingested.strings, count, seed)
        .map_err(|e| data(format!("{}: {e}", args.input.display())))?;
    write_pairs(&pairs, &out).map_err(|e| data(format!("writing {}: {e}", out.display())))?;

    println!(
        "scanned {} records, admitted {} strings of length {} (alphabet size {})",
        ingested.records_scanned,
        ingested.strings.len(),
        bucket.target_n(),
        ingested.alphabet.size()
    );
    println!("wrote {count} pairs to {}", out.display());
    Ok(())
}
