//! Deterministic CSV assembly: pinned headers and number formatting.
//!
//! Output files are golden-file friendly: numbers print as the shortest
//! decimal that round-trips (Rust's default float formatting), unbounded
//! values print as `inf`, cells never contain separators, and rows always
//! end with a bare line feed. Identical runs therefore produce identical
//! bytes.

/// Header of `bench` results and candidate files.
pub const RESULTS_HEADER: &str = "dataset,algorithm,params,n,sigma,edits,theta,K,Kprime,min_ratio,max_ratio,mean_ratio,pairs_used,pairs_excluded,mean_call_us";

/// Header of `theory` curve files.
pub const THEORY_HEADER: &str = "algorithm,n,theta,k,c,j,K";

/// Header of per-pair ratio dumps (`bench --dump-ratios`).
pub const RATIOS_HEADER: &str = "algorithm,params,pair_id,exact,approx";

/// Header of `dump-ratios` recheck output.
pub const RECHECK_HEADER: &str =
    "algorithm,params,theta,K,Kprime,min_ratio,max_ratio,pairs_used,pairs_excluded";

/// Header of `best` summaries.
pub const BEST_HEADER: &str = "sigma,n,edits,best,K";

/// Shortest round-trip decimal; `inf` for unbounded values.
pub fn num(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        format!("{v}")
    }
}

/// [`num`] with an empty cell for absent values.
pub fn opt_num(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

/// Makes a string safe as a CSV cell: separators and line breaks are
/// replaced by underscores (cells are never quoted).
pub fn cell(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            ',' | '"' | '\n' | '\r' => '_',
            other => other,
        })
        .collect()
}
