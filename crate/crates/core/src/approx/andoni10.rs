//! Hierarchical block-alignment distance.

use super::HierAlignParams;
use crate::strcore::{ensure_same_alphabet, SymbolString};
use crate::Result;

/// Padding symbol appended to bring both inputs to a shared power-of-two
/// length. Cannot collide with alphabet indices, which are bounded by the
/// alphabet size.
const SENTINEL: u32 = u32::MAX;

/// Bottom-up block-alignment cost between `x` and `y`.
///
/// Both strings are padded with a sentinel to length `N`, the next power of
/// two at or above `max(|x|, |y|, base_len)`. Level `L` partitions the
/// padded strings into blocks of length `L`; a block starting at `i` scores,
/// for each shift `s` in `[-2L, 2L]` (the full level domain; the root keeps
/// only `s = 0`), the cheapest way to align it against `y` displaced by `s`.
/// A length-1 block costs 0 when `x[i]` equals `y[i+s]` and 1 otherwise
/// (out-of-range targets count as mismatches); a longer block at shift `s`
/// sums, over its two half-blocks, `min over child shifts s' of
/// |s' - s| + child cost at s'`. The result is the root block's score at
/// shift 0.
///
/// When `prune_width` is unset the child minimum is exact (computed with a
/// two-sweep lower envelope, `O(N log N)` overall). With `prune_width = w`
/// only the `w` candidate shifts nearest to `s` — ordered by `(|s' - s|,
/// s')` ascending — are examined, trading accuracy for speed; the pruned
/// score is never below the exact one.
///
/// Zero exactly when `x == y`, and at most `N`. Errors when the inputs
/// disagree on their alphabet.
pub fn andoni10_distance(x: &SymbolString, y: &SymbolString, p: &HierAlignParams) -> Result<f64> {
    ensure_same_alphabet(x, y)?;
    let n = x.len().max(y.len()).max(p.base_len()).next_power_of_two();
    let xs = padded(x.symbols(), n);
    let ys = padded(y.symbols(), n);

    let mut len = 1usize;
    let mut bound = level_bound(len, n);
    let mut blocks: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            domain(bound)
                .map(|s| leaf_cost(&xs, &ys, i, s))
                .collect()
        })
        .collect();

    while len < n {
        if p.prune_width().is_none() {
            for costs in &mut blocks {
                envelope_in_place(costs);
            }
        }
        let child_bound = bound as i64;
        len *= 2;
        bound = level_bound(len, n);
        blocks = (0..n / len)
            .map(|k| {
                let left = &blocks[2 * k];
                let right = &blocks[2 * k + 1];
                domain(bound)
                    .map(|s| match p.prune_width() {
                        None => {
                            eval_envelope(left, child_bound, s)
                                + eval_envelope(right, child_bound, s)
                        }
                        Some(w) => {
                            eval_pruned(left, child_bound, s, w)
                                + eval_pruned(right, child_bound, s, w)
                        }
                    })
                    .collect()
            })
            .collect();
    }
    Ok(blocks[0][0] as f64)
}

/// Half-width of the shift domain at block length `len` in a padded length
/// `n`: the root block is held at shift 0.
fn level_bound(len: usize, n: usize) -> usize {
    if len == n {
        0
    } else {
        2 * len
    }
}

/// Shifts `-bound ..= bound`.
fn domain(bound: usize) -> impl Iterator<Item = i64> {
    -(bound as i64)..=bound as i64
}

fn padded(symbols: &[u32], n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(symbols);
    out.resize(n, SENTINEL);
    out
}

fn leaf_cost(xs: &[u32], ys: &[u32], i: usize, s: i64) -> u64 {
    let target = i as i64 + s;
    if target < 0 || target >= ys.len() as i64 {
        return 1;
    }
    u64::from(xs[i] != ys[target as usize])
}

/// In-place two-sweep lower envelope: afterwards `f[t]` holds
/// `min over t' of |t - t'| + f_before[t']`.
fn envelope_in_place(f: &mut [u64]) {
    for t in 1..f.len() {
        f[t] = f[t].min(f[t - 1] + 1);
    }
    for t in (0..f.len() - 1).rev() {
        f[t] = f[t].min(f[t + 1] + 1);
    }
}

/// Exact `min over s' of |s' - s| + child(s')` read off an enveloped child
/// array: clamp `s` into the child domain and pay the clamped distance.
fn eval_envelope(enveloped: &[u64], child_bound: i64, s: i64) -> u64 {
    let c = s.clamp(-child_bound, child_bound);
    enveloped[(c + child_bound) as usize] + (s - c).unsigned_abs()
}

/// Pruned `min over s' of |s' - s| + child(s')` over the `w` in-domain
/// candidates nearest to `s`, ordered by `(|s' - s|, s')` ascending.
fn eval_pruned(raw: &[u64], child_bound: i64, s: i64, w: usize) -> u64 {
    let center = s.clamp(-child_bound, child_bound);
    let mut best = u64::MAX;
    let mut seen = 0usize;
    let mut d = 0i64;
    while seen < w {
        let low = center - d;
        let high = center + d;
        if low < -child_bound && high > child_bound {
            break;
        }
        let candidates: &[i64] = if d == 0 { &[low] } else { &[low, high] };
        for &cand in candidates {
            if cand < -child_bound || cand > child_bound {
                continue;
            }
            let cost = raw[(cand + child_bound) as usize] + (cand - s).unsigned_abs();
            best = best.min(cost);
            seen += 1;
            if seen == w {
                break;
            }
        }
        d += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strcore::Alphabet;
    use proptest::prelude::*;

    fn s(text: &str) -> SymbolString {
        let alphabet = Alphabet::canonical(62).unwrap();
        SymbolString::from_text(&alphabet, text).unwrap()
    }

    #[test]
    fn zero_on_equal_inputs() {
        let p = HierAlignParams::default();
        assert_eq!(andoni10_distance(&s("abcd"), &s("abcd"), &p).unwrap(), 0.0);
        assert_eq!(andoni10_distance(&s(""), &s(""), &p).unwrap(), 0.0);
    }

    #[test]
    fn swap_example() {
        // Each leaf reaches its partner at shift ±1 for cost 1; the root at
        // shift 0 pays both displacements.
        let p = HierAlignParams::default();
        assert_eq!(andoni10_distance(&s("ab"), &s("ba"), &p).unwrap(), 2.0);
    }

    #[test]
    fn single_symbol_inputs() {
        let p = HierAlignParams::default();
        assert_eq!(andoni10_distance(&s("a"), &s("a"), &p).unwrap(), 0.0);
        assert_eq!(andoni10_distance(&s("a"), &s("b"), &p).unwrap(), 1.0);
        assert_eq!(andoni10_distance(&s("a"), &s(""), &p).unwrap(), 1.0);
    }

    #[test]
    fn base_len_only_pads() {
        let small = HierAlignParams::default();
        let padded = HierAlignParams::new(16, None).unwrap();
        assert_eq!(
            andoni10_distance(&s("abcd"), &s("abcd"), &padded).unwrap(),
            0.0
        );
        // Extra sentinel blocks align at shift 0 for free, so the padded
        // score cannot fall below the tight one.
        let tight = andoni10_distance(&s("ab"), &s("ba"), &small).unwrap();
        let wide = andoni10_distance(&s("ab"), &s("ba"), &padded).unwrap();
        assert!(wide >= tight);
    }

    #[test]
    fn pruned_with_wide_window_matches_exact() {
        let exact = HierAlignParams::default();
        let pruned = HierAlignParams::new(1, Some(1024)).unwrap();
        for (a, b) in [("ab", "ba"), ("abcdefgh", "efghabcd"), ("abcd", "abce")] {
            let e = andoni10_distance(&s(a), &s(b), &exact).unwrap();
            let w = andoni10_distance(&s(a), &s(b), &pruned).unwrap();
            assert_eq!(e, w, "inputs {a:?} {b:?}");
        }
    }

    #[test]
    fn rejects_alphabet_mismatch() {
        let a4 = Alphabet::canonical(4).unwrap();
        let a8 = Alphabet::canonical(8).unwrap();
        let x = SymbolString::from_text(&a4, "AB").unwrap();
        let y = SymbolString::from_text(&a8, "AB").unwrap();
        assert!(andoni10_distance(&x, &y, &HierAlignParams::default()).is_err());
    }

    fn arb_text(max: usize) -> impl Strategy<Value = String> {
        proptest::collection::vec(proptest::char::range('a', 'd'), 0..=max)
            .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn zero_iff_equal(a in arb_text(16), b in arb_text(16)) {
            let p = HierAlignParams::default();
            let d = andoni10_distance(&s(&a), &s(&b), &p).unwrap();
            prop_assert_eq!(d == 0.0, a == b);
        }

        #[test]
        fn bounded_by_padded_length(a in arb_text(16), b in arb_text(16)) {
            let p = HierAlignParams::default();
            let d = andoni10_distance(&s(&a), &s(&b), &p).unwrap();
            let n = a.len().max(b.len()).max(1).next_power_of_two();
            prop_assert!(d <= n as f64);
        }

        #[test]
        fn pruning_never_lowers_cost(a in arb_text(16), b in arb_text(16), w in 1usize..6) {
            let exact = HierAlignParams::default();
            let pruned = HierAlignParams::new(1, Some(w)).unwrap();
            let e = andoni10_distance(&s(&a), &s(&b), &exact).unwrap();
            let p = andoni10_distance(&s(&a), &s(&b), &pruned).unwrap();
            prop_assert!(p >= e);
        }
    }
}
