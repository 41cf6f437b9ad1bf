//! `best`: pivot results files into a best-algorithm-per-cell summary.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::errors::{data, CliResult};
use crate::format::{num, BEST_HEADER, RESULTS_HEADER};

/// Groups results rows by (sigma, n, edits) and names the algorithm with
/// the smallest distortion in each cell; ties are reported jointly,
/// separated by `|`. The identity control never competes.
#[derive(clap::Args, Debug)]
pub struct Args {
    /// One or more results CSV files produced by `bench`.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Output CSV path (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> CliResult<()> {
    // Cell key → algorithm names with the best distortion seen so far.
    let mut cells: BTreeMap<CellKey, (Vec<String>, f64)> = BTreeMap::new();

    for path in &args.inputs {
        let text = std::fs::read_to_string(path)
            .map_err(|e| data(format!("cannot read {}: {e}", path.display())))?;
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, header)) if header == RESULTS_HEADER => {}
            _ => {
                return Err(data(format!(
                    "{}: not a results file (unexpected header)",
                    path.display()
                )))
            }
        }
        for (idx, line) in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != RESULTS_HEADER.split(',').count() {
                return Err(data(format!(
                    "{}:{}: expected {} columns, found {}",
                    path.display(),
                    idx + 1,
                    RESULTS_HEADER.split(',').count(),
                    fields.len()
                )));
            }
            let algorithm = fields[1];
            if algorithm == "identity" {
                continue;
            }
            let (n, sigma, edits) = (fields[3], fields[4], fields[5]);
            let k = parse_k(fields[7])
                .map_err(|msg| data(format!("{}:{}: {msg}", path.display(), idx + 1)))?;
            let key = CellKey::new(sigma, n, edits);
            match cells.get_mut(&key) {
                None => {
                    cells.insert(key, (vec![algorithm.to_string()], k));
                }
                Some((names, best)) => match k.partial_cmp(best).expect("distortions are not NaN") {
                    Ordering::Less => {
                        *names = vec![algorithm.to_string()];
                        *best = k;
                    }
                    Ordering::Equal => {
                        if !names.iter().any(|n| n == algorithm) {
                            names.push(algorithm.to_string());
                        }
                    }
                    Ordering::Greater => {}
                },
            }
        }
    }

    let mut csv = String::from(BEST_HEADER);
    csv.push('\n');
    for (key, (names, k)) in &cells {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            key.sigma,
            key.n,
            key.edits,
            names.join("|"),
            num(*k),
        ));
    }

    match &args.out {
        Some(path) => {
            std::fs::write(path, csv)
                .map_err(|e| data(format!("writing {}: {e}", path.display())))?;
            println!("wrote {} cells to {}", cells.len(), path.display());
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn parse_k(raw: &str) -> Result<f64, String> {
    if raw == "inf" {
        return Ok(f64::INFINITY);
    }
    raw.parse()
        .map_err(|e| format!("distortion column {raw:?}: {e}"))
}

/// Pivot key ordered numerically where the cells parse as numbers, so the
/// summary reads from small alphabets and lengths upward.
#[derive(PartialEq, Eq)]
struct CellKey {
    sigma: String,
    n: String,
    edits: String,
}

impl CellKey {
    fn new(sigma: &str, n: &str, edits: &str) -> Self {
        Self {
            sigma: sigma.to_string(),
            n: n.to_string(),
            edits: edits.to_string(),
        }
    }
}

impl Ord for CellKey {
    fn cmp(&self, other: &Self) -> Ordering {
        field_cmp(&self.sigma, &other.sigma)
            .then_with(|| field_cmp(&self.n, &other.n))
            .then_with(|| field_cmp(&self.edits, &other.edits))
    }
}

impl PartialOrd for CellKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric comparison when both sides parse, lexicographic otherwise.
fn field_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<f64>(), b.parse::<f64>()) {
        (Ok(x), Ok(y)) => x.total_cmp(&y).then_with(|| a.cmp(b)),
        _ => a.cmp(b),
    }
}
