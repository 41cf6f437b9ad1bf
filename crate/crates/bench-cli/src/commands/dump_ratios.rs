//! `dump-ratios`: recompute distortions from a per-pair ratio dump.
//!
//! This closes the audit loop for `bench`: every distortion it reports can
//! be reproduced from the persisted per-pair distances alone.

use std::collections::HashMap;
use std::path::PathBuf;

use editdist_core::distortion::{empirical_distortion, RatioSample};

use crate::config::{resolve, Config};
use crate::errors::{data, usage, CliResult};
use crate::format::{num, RATIOS_HEADER, RECHECK_HEADER};

/// Reads a `bench --dump-ratios` file, groups rows by (algorithm, params),
/// and reports each group's distortion at the requested threshold.
#[derive(clap::Args, Debug)]
pub struct Args {
    /// Ratio dump produced by `bench --dump-ratios`.
    input: PathBuf,
    /// Distortion threshold.
    #[arg(long)]
    theta: Option<f64>,
    /// Output CSV path (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Key-value configuration file; flags win over its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

pub fn run(args: Args) -> CliResult<()> {
    let cfg = Config::load(args.config.as_deref())?;
    let theta = resolve(args.theta, &cfg, "theta", 1.0)?;
    if !theta.is_finite() || theta < 0.0 {
        return Err(usage(format!("theta must be finite and >= 0, got {theta}")));
    }

    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| data(format!("cannot read {}: {e}", args.input.display())))?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == RATIOS_HEADER => {}
        _ => {
            return Err(data(format!(
                "{}: not a ratio dump (unexpected header)",
                args.input.display()
            )))
        }
    }

    // Groups keep their first-appearance order so output mirrors the dump.
    let mut order: Vec<(String, String)> = Vec::new();
    let mut groups: HashMap<(String, String), Vec<RatioSample>> = HashMap::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let complain = |msg: String| data(format!("{}:{}: {msg}", args.input.display(), idx + 1));
        let fields: Vec<&str> = line.split(',').collect();
        let [algorithm, params, _pair_id, exact, approx] = fields.as_slice() else {
            return Err(complain(format!("expected 5 columns, found {}", fields.len())));
        };
        let exact: f64 = exact
            .parse()
            .map_err(|e| complain(format!("exact column {exact:?}: {e}")))?;
        let approx: f64 = approx
            .parse()
            .map_err(|e| complain(format!("approx column {approx:?}: {e}")))?;
        let sample = RatioSample::new(exact, approx).map_err(|e| complain(e.to_string()))?;
        let key = (algorithm.to_string(), params.to_string());
        groups
            .entry(key.clone())
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(sample);
    }
    if order.is_empty() {
        return Err(data(format!("{}: no rows", args.input.display())));
    }

    let mut csv = String::from(RECHECK_HEADER);
    csv.push('\n');
    for key in &order {
        let samples = &groups[key];
        let report = empirical_distortion(samples, theta)
            .map_err(|e| data(format!("{}/{}: {e}", key.0, key.1)))?;
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            key.0,
            key.1,
            num(theta),
            num(report.k),
            num(report.k_prime),
            num(report.min_ratio),
            num(report.max_ratio),
            report.n_used,
            report.n_excluded,
        ));
    }

    match &args.out {
        Some(path) => {
            std::fs::write(path, csv)
                .map_err(|e| data(format!("writing {}: {e}", path.display())))?;
            println!("wrote {} groups to {}", order.len(), path.display());
        }
        None => print!("{csv}"),
    }
    Ok(())
}
