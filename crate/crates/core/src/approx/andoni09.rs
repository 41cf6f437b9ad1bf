//! Predecessor-window distance on strings with all-distinct symbols.

use std::collections::HashSet;
use std::hash::Hash;

use super::charikar::position_map;
use crate::Result;

/// Sums a per-symbol displacement score over the union of symbols of `p`
/// and `q`.
///
/// A symbol occurring in only one input scores 1. A symbol occurring in
/// both scores the maximum, over window widths `w = 1, 2, 4, …` up to
/// `max(|p|, |q|)`, of `|Δ| / (2w)`, where `Δ` is the symmetric difference
/// between the sets of up to `w` symbols immediately preceding its
/// occurrence in `p` and in `q`. Windows clip at the string start; the
/// denominator keeps the nominal width.
///
/// Inputs are symbol slices with all elements distinct (the Ulam
/// condition); pass a plain string's symbols or an expansion's grams.
/// Symmetric, zero on equal inputs, and at most `|p| + |q|`. Errors when
/// either input repeats a symbol.
pub fn andoni09_distance<S: Eq + Hash>(p: &[S], q: &[S]) -> Result<f64> {
    let pos_q = position_map(q)?;
    let pos_p = position_map(p)?;
    let max_len = p.len().max(q.len());
    let mut total = 0.0;
    for (i, sym) in p.iter().enumerate() {
        match pos_q.get(sym) {
            Some(&j) => total += common_symbol_score(p, i, q, j, max_len),
            None => total += 1.0,
        }
    }
    for sym in q {
        if !pos_p.contains_key(sym) {
            total += 1.0;
        }
    }
    Ok(total)
}

/// Best window score for a symbol at `p[i]` and `q[j]`.
fn common_symbol_score<S: Eq + Hash>(
    p: &[S],
    i: usize,
    q: &[S],
    j: usize,
    max_len: usize,
) -> f64 {
    let mut best = 0.0f64;
    let mut w = 1usize;
    while w <= max_len {
        let pred_p: HashSet<&S> = p[i.saturating_sub(w)..i].iter().collect();
        let pred_q: HashSet<&S> = q[j.saturating_sub(w)..j].iter().collect();
        let shared = pred_p.intersection(&pred_q).count();
        let delta = pred_p.len() + pred_q.len() - 2 * shared;
        best = best.max(delta as f64 / (2 * w) as f64);
        w *= 2;
    }
    best
}
