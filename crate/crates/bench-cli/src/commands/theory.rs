//! `theory`: evaluate the closed-form distortion curves over a length grid.

use std::path::PathBuf;

use editdist_core::distortion::{log_spaced, theory_curves, BatuRegime, CRule, CurveSpec, ThetaRule};

use crate::config::{resolve, resolve_required, Config};
use crate::errors::{data, usage, CliResult};
use crate::format::{num, opt_num, THEORY_HEADER};

/// Emits one row per (algorithm, grid length) with the refined
/// theoretical distortion.
#[derive(clap::Args, Debug)]
pub struct Args {
    /// Length grid: `from:to:count` (log-spaced) or a comma-separated
    /// increasing list.
    #[arg(long = "n-grid")]
    n_grid: Option<String>,
    /// Threshold rule: `n` (threshold equals the length) or a fixed number.
    #[arg(long)]
    theta: Option<String>,
    /// Alphabet size driving the block-distance rows.
    #[arg(long)]
    k: Option<f64>,
    /// Block parameter: `rule` (derived from the length) or a fixed number.
    #[arg(long)]
    c: Option<String>,
    /// Block-distance regime: `1` (single reduction round) or `limit`.
    #[arg(long)]
    j: Option<String>,
    /// Output CSV path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Key-value configuration file; flags win over its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

pub fn run(args: Args) -> CliResult<()> {
    let cfg = Config::load(args.config.as_deref())?;
    let grid_spec = resolve(args.n_grid, &cfg, "n-grid", "100:10000:25".to_string())?;
    let theta_spec = resolve(args.theta, &cfg, "theta", "n".to_string())?;
    let k = resolve(args.k, &cfg, "k", 2.0)?;
    let c_spec = resolve(args.c, &cfg, "c", "rule".to_string())?;
    let j_spec = resolve(args.j, &cfg, "j", "limit".to_string())?;
    let out: PathBuf = resolve_required(args.out, &cfg, "out")?;

    let n_grid = parse_grid(&grid_spec)?;
    let theta_rule = match theta_spec.as_str() {
        "n" => ThetaRule::EqualN,
        fixed => ThetaRule::Fixed(
            fixed
                .parse()
                .map_err(|e| usage(format!("theta {fixed:?}: {e}")))?,
        ),
    };
    let c_rule = match c_spec.as_str() {
        "rule" => CRule::LengthRule,
        fixed => CRule::Fixed(
            fixed
                .parse()
                .map_err(|e| usage(format!("c {fixed:?}: {e}")))?,
        ),
    };
    let regime = match j_spec.as_str() {
        "1" => BatuRegime::Single,
        "limit" => BatuRegime::Limit,
        other => return Err(usage(format!("j must be 1 or limit, got {other:?}"))),
    };

    let points = theory_curves(&CurveSpec {
        n_grid,
        theta_rule,
        k,
        c_rule,
        regime,
    })
    .map_err(usage)?;

    let mut csv = String::from(THEORY_HEADER);
    csv.push('\n');
    for p in &points {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            p.algorithm,
            num(p.n),
            opt_num(p.theta),
            opt_num(p.k),
            opt_num(p.c),
            p.j.map(|r| r.to_string()).unwrap_or_default(),
            num(p.value),
        ));
    }
    std::fs::write(&out, csv).map_err(|e| data(format!("writing {}: {e}", out.display())))?;
    println!("wrote {} rows to {}", points.len(), out.display());
    Ok(())
}

/// `from:to:count` (log-spaced, endpoints included) or an explicit
/// comma-separated list.
fn parse_grid(spec: &str) -> CliResult<Vec<f64>> {
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [from, to, count] = parts.as_slice() else {
            return Err(usage(format!("n-grid {spec:?}: expected from:to:count")));
        };
        let from: f64 = from
            .parse()
            .map_err(|e| usage(format!("n-grid start {from:?}: {e}")))?;
        let to: f64 = to
            .parse()
            .map_err(|e| usage(format!("n-grid end {to:?}: {e}")))?;
        let count: usize = count
            .parse()
            .map_err(|e| usage(format!("n-grid count {count:?}: {e}")))?;
        log_spaced(from, to, count).map_err(usage)
    } else {
        spec.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse()
                    .map_err(|e| usage(format!("n-grid entry {part:?}: {e}")))
            })
            .collect()
    }
}
