//! `bench`: run every algorithm candidate over a pair file and report
//! empirical distortions.
//!
//! For each pair the exact distance is taken from the file (or computed on
//! demand) and every candidate produces one approximate distance; the two
//! permutation-metric algorithms run on automatically expanded inputs and
//! the expansion order is reported per run (max and mean). Each algorithm's
//! row in the main results file comes from its candidate with the smallest
//! distortion; a companion `<out>_candidates` file keeps every candidate's
//! row. A built-in identity control (approximation = exact) must come out
//! at distortion 1 and guards the pipeline end to end.
//!
//! Runs are deterministic: pairs are processed in parallel but aggregated
//! in pair order, so the output bytes do not depend on the thread count.
//! Per-call timing is opt-in (`--timing`) because its column is the one
//! quantity that legitimately varies between runs.

use std::path::{Path, PathBuf};
use std::time::Instant;

use editdist_core::approx::{
    andoni09_distance, andoni10_distance, baryossef_distance, batu_distance, charikar_distance,
    sokolov_distance, BatuParams, HierAlignParams, QGramParams,
};
use editdist_core::datasets::{read_pairs, PairRecord};
use editdist_core::distortion::{empirical_distortion, Algorithm, RatioSample};
use editdist_core::strcore::edit_distance;
use editdist_core::ulam::{expand, minimal_expansion_order, ExpandedString};
use rayon::prelude::*;

use crate::config::{resolve, resolve_optional, resolve_required, Config};
use crate::errors::{data, internal, usage, CliResult};
use crate::format::{cell, num, opt_num, RATIOS_HEADER, RESULTS_HEADER};

/// Name of the built-in control row.
const IDENTITY: &str = "identity";

/// Default algorithm list: all six.
const DEFAULT_ALGOS: &str = "baryossef,sokolov,charikar,andoni09,andoni10,batu";

/// Computes empirical distortions over a pair file and writes results,
/// candidate, and optional per-pair ratio CSVs.
#[derive(clap::Args, Debug)]
pub struct Args {
    /// Input pair file.
    input: PathBuf,
    /// Distortion threshold: pairs with exact distance below it are
    /// excluded.
    #[arg(long)]
    theta: Option<f64>,
    /// Comma-separated algorithms to run (default: all six).
    #[arg(long)]
    algos: Option<String>,
    /// Candidate gram sizes for the two q-gram algorithms.
    #[arg(long = "q-set")]
    q_set: Option<String>,
    /// Candidate block parameters for the block-shrinking algorithm.
    #[arg(long = "c-set")]
    c_set: Option<String>,
    /// Shift-candidate cap for the hierarchical alignment (default: none).
    #[arg(long = "prune-width")]
    prune_width: Option<usize>,
    /// Results CSV path; candidate rows go to `<out stem>_candidates`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = one per core). Output bytes do not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    /// Record mean wall time per distance call (makes output bytes vary
    /// between runs).
    #[arg(long)]
    timing: bool,
    /// Also write every (candidate, pair) distance to this CSV.
    #[arg(long = "dump-ratios")]
    dump_ratios: Option<PathBuf>,
    /// Key-value configuration file; flags win over its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// One approximation candidate to evaluate on every pair.
struct Candidate {
    algo: &'static str,
    /// Candidate identifier, e.g. `q=2` or `c=4;j=1`; empty when the
    /// algorithm has no tunable parameters.
    params: String,
    kind: Kind,
}

enum Kind {
    Identity,
    BarYossef(QGramParams),
    Sokolov(QGramParams),
    Charikar,
    Andoni09,
    Andoni10(HierAlignParams),
    Batu(BatuParams),
}

/// Every candidate's value for one pair, in candidate order.
struct PairOutcome {
    id: u64,
    exact: usize,
    t: Option<usize>,
    values: Vec<f64>,
    nanos: Vec<u64>,
}

/// One candidate's aggregated report.
struct CandidateResult {
    algo: &'static str,
    /// Row label: candidate parameters plus expansion-order aggregates.
    params: String,
    k: f64,
    kprime: f64,
    min_ratio: f64,
    max_ratio: f64,
    mean_ratio: Option<f64>,
    used: usize,
    excluded: usize,
    mean_us: Option<f64>,
}

pub fn run(args: Args) -> CliResult<()> {
    let cfg = Config::load(args.config.as_deref())?;
    let theta = resolve(args.theta, &cfg, "theta", 1.0)?;
    if !theta.is_finite() || theta < 0.0 {
        return Err(usage(format!("theta must be finite and >= 0, got {theta}")));
    }
    let algos = parse_algos(&resolve(args.algos, &cfg, "algos", DEFAULT_ALGOS.to_string())?)?;
    let q_set = parse_usize_list(&resolve(args.q_set, &cfg, "q-set", "2,4,6".to_string())?, "q-set")?;
    let c_set = parse_usize_list(&resolve(args.c_set, &cfg, "c-set", "2,4".to_string())?, "c-set")?;
    let prune_width = resolve_optional(args.prune_width, &cfg, "prune-width")?;
    let threads = resolve(args.threads, &cfg, "threads", 0)?;
    let timing = args.timing || resolve(None, &cfg, "timing", false)?;
    let out: PathBuf = resolve_required(args.out, &cfg, "out")?;
    let dump_path = resolve_optional(args.dump_ratios, &cfg, "dump-ratios")?;

    let records = read_pairs(&args.input)
        .map_err(|e| data(format!("{}: {e}", args.input.display())))?;
    if records.is_empty() {
        return Err(data(format!("{}: pair file has no records", args.input.display())));
    }

    let candidates = build_candidates(&algos, &q_set, &c_set, prune_width)?;
    let need_expansion = candidates
        .iter()
        .any(|c| matches!(c.kind, Kind::Charikar | Kind::Andoni09));

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(internal)?;
    let mut outcomes = pool
        .install(|| {
            records
                .par_iter()
                .map(|pair| compute_pair(pair, &candidates, need_expansion, timing))
                .collect::<Vec<CliResult<PairOutcome>>>()
        })
        .into_iter()
        .collect::<CliResult<Vec<PairOutcome>>>()?;
    outcomes.sort_by_key(|o| o.id);

    let t_stats = need_expansion.then(|| {
        let ts: Vec<usize> = outcomes
            .iter()
            .map(|o| o.t.expect("expansion ran for every pair"))
            .collect();
        let max = *ts.iter().max().expect("at least one record");
        let mean = ts.iter().sum::<usize>() as f64 / ts.len() as f64;
        (max, mean)
    });

    let results = aggregate(&candidates, &outcomes, theta, timing, t_stats)?;

    // Dataset-level columns: generator parameters when the whole file
    // agrees on them, otherwise observed values (edit budget stays empty
    // for files without one).
    let dataset = cell(
        &args
            .input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| args.input.display().to_string()),
    );
    let n_col = uniform_param(&records, "n")
        .map(str::to_string)
        .unwrap_or_else(|| {
            let n = records
                .iter()
                .map(|r| r.x.len().max(r.y.len()))
                .max()
                .expect("at least one record");
            n.to_string()
        });
    let sigma_col = uniform_param(&records, "sigma")
        .map(str::to_string)
        .unwrap_or_else(|| records[0].x.alphabet().size().to_string());
    let edits_col = uniform_param(&records, "e").map(str::to_string).unwrap_or_default();

    let row = |r: &CandidateResult| -> String {
        format!(
            "{dataset},{},{},{n_col},{sigma_col},{edits_col},{},{},{},{},{},{},{},{},{}\n",
            r.algo,
            cell(&r.params),
            num(theta),
            num(r.k),
            num(r.kprime),
            num(r.min_ratio),
            num(r.max_ratio),
            opt_num(r.mean_ratio),
            r.used,
            r.excluded,
            opt_num(r.mean_us),
        )
    };

    // Main file: the identity control, then each algorithm's best (lowest
    // distortion) candidate; ties keep the earliest candidate.
    let mut main_csv = String::from(RESULTS_HEADER);
    main_csv.push('\n');
    let mut row_algos: Vec<&'static str> = vec![IDENTITY];
    row_algos.extend(algos.iter().map(|a| a.name()));
    for name in row_algos {
        let best = results
            .iter()
            .filter(|r| r.algo == name)
            .reduce(|best, r| if r.k < best.k { r } else { best })
            .ok_or_else(|| internal(format!("no candidate evaluated for {name}")))?;
        main_csv.push_str(&row(best));
    }
    std::fs::write(&out, main_csv)
        .map_err(|e| data(format!("writing {}: {e}", out.display())))?;

    let companion = companion_path(&out);
    let mut cand_csv = String::from(RESULTS_HEADER);
    cand_csv.push('\n');
    for r in &results {
        cand_csv.push_str(&row(r));
    }
    std::fs::write(&companion, cand_csv)
        .map_err(|e| data(format!("writing {}: {e}", companion.display())))?;

    if let Some(path) = &dump_path {
        let mut dump = String::from(RATIOS_HEADER);
        dump.push('\n');
        for (idx, cand) in candidates.iter().enumerate() {
            for o in &outcomes {
                dump.push_str(&format!(
                    "{},{},{},{},{}\n",
                    cand.algo,
                    cell(&cand.params),
                    o.id,
                    o.exact,
                    num(o.values[idx]),
                ));
            }
        }
        std::fs::write(path, dump)
            .map_err(|e| data(format!("writing {}: {e}", path.display())))?;
    }

    println!(
        "benchmarked {} pairs with {} candidates; wrote {} and {}",
        outcomes.len(),
        candidates.len(),
        out.display(),
        companion.display()
    );
    if let Some(path) = &dump_path {
        println!("dumped per-pair distances to {}", path.display());
    }
    Ok(())
}

/// Parses the algorithm list, preserving the canonical reporting order and
/// dropping duplicates.
fn parse_algos(raw: &str) -> CliResult<Vec<Algorithm>> {
    let mut requested = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let algo: Algorithm = part.parse().map_err(usage)?;
        if !requested.contains(&algo) {
            requested.push(algo);
        }
    }
    if requested.is_empty() {
        return Err(usage("at least one algorithm is required"));
    }
    Ok(Algorithm::ALL
        .into_iter()
        .filter(|a| requested.contains(a))
        .collect())
}

fn parse_usize_list(raw: &str, what: &str) -> CliResult<Vec<usize>> {
    let mut values = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part
            .parse()
            .map_err(|e| usage(format!("{what} entry {part:?}: {e}")))?;
        if !values.contains(&v) {
            values.push(v);
        }
    }
    if values.is_empty() {
        return Err(usage(format!("{what} must name at least one value")));
    }
    Ok(values)
}

fn build_candidates(
    algos: &[Algorithm],
    q_set: &[usize],
    c_set: &[usize],
    prune_width: Option<usize>,
) -> CliResult<Vec<Candidate>> {
    let mut candidates = vec![Candidate {
        algo: IDENTITY,
        params: String::new(),
        kind: Kind::Identity,
    }];
    for &algo in algos {
        match algo {
            Algorithm::BarYossef => {
                for &q in q_set {
                    candidates.push(Candidate {
                        algo: algo.name(),
                        params: format!("q={q}"),
                        kind: Kind::BarYossef(QGramParams::new(q).map_err(usage)?),
                    });
                }
            }
            Algorithm::Sokolov => {
                for &q in q_set {
                    candidates.push(Candidate {
                        algo: algo.name(),
                        params: format!("q={q}"),
                        kind: Kind::Sokolov(QGramParams::new(q).map_err(usage)?),
                    });
                }
            }
            Algorithm::Charikar => candidates.push(Candidate {
                algo: algo.name(),
                params: String::new(),
                kind: Kind::Charikar,
            }),
            Algorithm::Andoni09 => candidates.push(Candidate {
                algo: algo.name(),
                params: String::new(),
                kind: Kind::Andoni09,
            }),
            Algorithm::Andoni10 => {
                let label = match prune_width {
                    Some(w) => format!("prune={w}"),
                    None => "prune=inf".to_string(),
                };
                candidates.push(Candidate {
                    algo: algo.name(),
                    params: label,
                    kind: Kind::Andoni10(HierAlignParams::new(1, prune_width).map_err(usage)?),
                });
            }
            Algorithm::Batu => {
                for &c in c_set {
                    candidates.push(Candidate {
                        algo: algo.name(),
                        params: format!("c={c};j=1"),
                        kind: Kind::Batu(BatuParams::new(c, 1).map_err(usage)?),
                    });
                }
            }
        }
    }
    Ok(candidates)
}

fn compute_pair(
    pair: &PairRecord,
    candidates: &[Candidate],
    need_expansion: bool,
    timing: bool,
) -> CliResult<PairOutcome> {
    let fail = |e: editdist_core::Error| data(format!("pair {}: {e}", pair.id));
    let exact = match pair.exact {
        Some(d) => d,
        None => edit_distance(&pair.x, &pair.y).map_err(fail)?,
    };
    let expansion: Option<(ExpandedString, ExpandedString)> = if need_expansion {
        let t = minimal_expansion_order(&pair.x, &pair.y).map_err(fail)?;
        Some((
            expand(&pair.x, t).map_err(fail)?,
            expand(&pair.y, t).map_err(fail)?,
        ))
    } else {
        None
    };

    let mut values = Vec::with_capacity(candidates.len());
    let mut nanos = Vec::with_capacity(candidates.len());
    for candidate in candidates {
        let started = timing.then(Instant::now);
        let value = match &candidate.kind {
            Kind::Identity => exact as f64,
            Kind::BarYossef(q) => baryossef_distance(&pair.x, &pair.y, q).map_err(fail)?,
            Kind::Sokolov(q) => sokolov_distance(&pair.x, &pair.y, q).map_err(fail)?,
            Kind::Charikar => {
                let (ex, ey) = expansion.as_ref().expect("expansion precomputed");
                charikar_distance(ex.grams(), ey.grams()).map_err(fail)?
            }
            Kind::Andoni09 => {
                let (ex, ey) = expansion.as_ref().expect("expansion precomputed");
                andoni09_distance(ex.grams(), ey.grams()).map_err(fail)?
            }
            Kind::Andoni10(p) => andoni10_distance(&pair.x, &pair.y, p).map_err(fail)?,
            Kind::Batu(p) => batu_distance(&pair.x, &pair.y, p).map_err(fail)?,
        };
        values.push(value);
        nanos.push(
            started
                .map(|s| u64::try_from(s.elapsed().as_nanos()).unwrap_or(u64::MAX))
                .unwrap_or(0),
        );
    }
    Ok(PairOutcome {
        id: pair.id,
        exact,
        t: expansion.as_ref().map(|(ex, _)| ex.t()),
        values,
        nanos,
    })
}

fn aggregate(
    candidates: &[Candidate],
    outcomes: &[PairOutcome],
    theta: f64,
    timing: bool,
    t_stats: Option<(usize, f64)>,
) -> CliResult<Vec<CandidateResult>> {
    let mut results = Vec::with_capacity(candidates.len());
    for (idx, candidate) in candidates.iter().enumerate() {
        let samples: Vec<RatioSample> = outcomes
            .iter()
            .map(|o| RatioSample::new(o.exact as f64, o.values[idx]).map_err(internal))
            .collect::<CliResult<_>>()?;
        let report = empirical_distortion(&samples, theta).map_err(data)?;
        let ratios: Vec<f64> = samples
            .iter()
            .filter(|s| s.exact() >= theta)
            .filter_map(|s| s.ratio())
            .collect();
        let mean_ratio =
            (!ratios.is_empty()).then(|| ratios.iter().sum::<f64>() / ratios.len() as f64);
        let mean_us = (timing && !matches!(candidate.kind, Kind::Identity)).then(|| {
            let total: u64 = outcomes.iter().map(|o| o.nanos[idx]).sum();
            total as f64 / 1_000.0 / outcomes.len() as f64
        });
        let params = match (&candidate.kind, t_stats) {
            (Kind::Charikar | Kind::Andoni09, Some((t_max, t_mean))) => {
                let aggregates = format!("t_max={t_max};t_mean={}", num(t_mean));
                if candidate.params.is_empty() {
                    aggregates
                } else {
                    format!("{};{aggregates}", candidate.params)
                }
            }
            _ => candidate.params.clone(),
        };
        results.push(CandidateResult {
            algo: candidate.algo,
            params,
            k: report.k,
            kprime: report.k_prime,
            min_ratio: report.min_ratio,
            max_ratio: report.max_ratio,
            mean_ratio,
            used: report.n_used,
            excluded: report.n_excluded,
            mean_us,
        });
    }
    Ok(results)
}

/// First value of a per-pair parameter shared by every record, if any.
fn uniform_param<'a>(records: &'a [PairRecord], key: &str) -> Option<&'a str> {
    let first = records.first()?.meta.params.get(key)?;
    records
        .iter()
        .all(|r| r.meta.params.get(key) == Some(first))
        .then_some(first.as_str())
}

/// `results.csv` → `results_candidates.csv`, preserving the extension.
fn companion_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "results".to_string());
    let name = match out.extension() {
        Some(ext) => format!("{stem}_candidates.{}", ext.to_string_lossy()),
        None => format!("{stem}_candidates"),
    };
    out.with_file_name(name)
}
