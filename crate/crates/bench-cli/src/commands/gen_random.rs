//! `gen-random`: synthesize a reproducible random pair file.

use std::collections::BTreeMap;
use std::path::PathBuf;

use editdist_core::datasets::{gen_random_pairs, write_pairs, RandomSpec};

use crate::config::{resolve, resolve_required, Config};
use crate::errors::{data, usage, CliResult};

/// Generates pairs by applying a bounded edit budget to random strings and
/// writes them with cached exact distances.
#[derive(clap::Args, Debug)]
pub struct Args {
    /// String length.
    #[arg(long)]
    n: Option<usize>,
    /// Alphabet size (2..=62).
    #[arg(long)]
    sigma: Option<usize>,
    /// Edit budget per pair, in cost units.
    #[arg(long)]
    edits: Option<usize>,
    /// Number of pairs.
    #[arg(long)]
    count: Option<usize>,
    /// Master seed; every pair derives its own substream from it.
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
    let n = resolve(args.n, &cfg, "n", 100)?;
    let sigma = resolve(args.sigma, &cfg, "sigma", 20)?;
    let edits = resolve(args.edits, &cfg, "edits", 4)?;
    let count = resolve(args.count, &cfg, "count", 200)?;
    let seed = resolve(args.seed, &cfg, "seed", 0)?;
    let out: PathBuf = resolve_required(args.out, &cfg, "out")?;

    let spec = RandomSpec::new(n, sigma, edits, count, seed).map_err(usage)?;
    let pairs = gen_random_pairs(&spec);
    write_pairs(&pairs, &out).map_err(|e| data(format!("writing {}: {e}", out.display())))?;

    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for pair in &pairs {
        let d = pair.exact.expect("generated pairs cache their exact distance");
        *histogram.entry(d).or_default() += 1;
    }
    let rendered: Vec<String> = histogram
        .iter()
        .map(|(d, count)| format!("{d}:{count}"))
        .collect();
    println!("wrote {count} pairs to {}", out.display());
    println!("exact-distance histogram: {}", rendered.join(" "));
    Ok(())
}
