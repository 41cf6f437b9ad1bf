//! Shrink-then-block edit distance.
//!
//! A string is shrunk obliviously — looking only at itself — into a short
//! sequence of blocks, and two strings are compared by the edit distance
//! between their block sequences, scaled by the maximum block length. The
//! blocking is locally consistent: equal substrings far from the edit sites
//! tend to produce equal blocks, so few block edits are needed.

use super::BatuParams;
use crate::strcore::{ensure_same_alphabet, levenshtein, SymbolString};
use crate::Result;

/// A string over the derived block alphabet: each symbol is one block's
/// original content. Blocks compare by content, so equal blocks from
/// different strings are equal symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockString {
    blocks: Vec<Box<[u32]>>,
}

impl BlockString {
    /// Block contents, in string order. Concatenated, they reproduce the
    /// source string exactly.
    pub fn blocks(&self) -> &[Box<[u32]>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Shrinks `x` into a block string determined by `x` alone.
///
/// Runs `j` rounds of deterministic alphabet reduction on the symbol
/// labels: each position is relabelled as `2b + v`, where `b` is the lowest
/// bit index at which its label differs from its predecessor's (position 0
/// takes an all-zero virtual predecessor) and `v` is its own bit there; a
/// position whose label equals its predecessor's takes the label `2w` (one
/// past any differing-bit label), where `w` is the current bit width. Block
/// boundaries are then the positions whose final label is strictly smaller
/// than every other label within distance `c − 1`; strictness means ties
/// never create boundaries. A repair pass splits any block longer than
/// `2c − 1` into pieces of length `2c − 1`, rebalancing a short tail with
/// the last full piece so every piece lands in `[c, 2c − 1]`, and finally a
/// first or last block shorter than `c` is merged into its neighbour.
/// Interior blocks always end with length in `[c, 2c − 1]`; only the first
/// and last may fall outside. The output has at most `⌈|x|/c⌉ + 2` blocks.
///
/// The empty string shrinks to the empty block string.
pub fn batu_shrink(x: &SymbolString, p: &BatuParams) -> BlockString {
    let n = x.len();
    if n == 0 {
        return BlockString { blocks: Vec::new() };
    }
    let c = p.c();
    let mut labels = x.symbols().to_vec();
    let mut width = x.alphabet().bit_width();
    for _ in 0..p.j() {
        (labels, width) = reduce_once(&labels, width);
    }
    let mut starts = boundary_starts(&labels, c);
    starts = split_long_runs(&starts, n, c);
    merge_short_ends(&mut starts, n, c);
    let mut bounds = starts;
    bounds.push(n);
    let blocks = bounds
        .windows(2)
        .map(|w| Box::from(&x.symbols()[w[0]..w[1]]))
        .collect();
    BlockString { blocks }
}

/// Block-wise edit distance: `(2c − 1)` times the edit distance between the
/// two shrunk block sequences. Zero when `x = y`; strictly positive
/// whenever `x ≠ y`, because each block sequence concatenates back to its
/// source string. Errors when the inputs disagree on their alphabet.
pub fn batu_distance(x: &SymbolString, y: &SymbolString, p: &BatuParams) -> Result<f64> {
    ensure_same_alphabet(x, y)?;
    let bx = batu_shrink(x, p);
    let by = batu_shrink(y, p);
    let block_edits = levenshtein(bx.blocks(), by.blocks());
    Ok((2 * p.c() - 1) as f64 * block_edits as f64)
}

/// One alphabet-reduction round over labels of the given bit width.
/// Returns the new labels and their bit width: labels range over
/// `[0, 2·width]`, so the new width is the bit length of `2·width`.
fn reduce_once(labels: &[u32], width: u32) -> (Vec<u32>, u32) {
    let tie = 2 * width;
    let next = labels
        .iter()
        .enumerate()
        .map(|(i, &cur)| {
            let prev = if i == 0 { 0 } else { labels[i - 1] };
            let diff = cur ^ prev;
            if diff == 0 {
                tie
            } else {
                let b = diff.trailing_zeros();
                2 * b + ((cur >> b) & 1)
            }
        })
        .collect();
    (next, u32::BITS - tie.leading_zeros())
}

/// Block start positions: 0, plus every position whose label is strictly
/// smaller than all other labels within distance `c − 1`. Two such minima
/// are always at least `c` apart.
fn boundary_starts(labels: &[u32], c: usize) -> Vec<usize> {
    let n = labels.len();
    let r = c - 1;
    let mut starts = vec![0];
    for p in 1..n {
        let lo = p.saturating_sub(r);
        let hi = (p + r).min(n - 1);
        let minimal = (lo..=hi).all(|k| k == p || labels[p] < labels[k]);
        if minimal {
            starts.push(p);
        }
    }
    starts
}

/// Splits every run longer than `2c − 1` into pieces of `2c − 1`; a tail
/// shorter than `c` is pooled with the preceding full piece and the pool
/// `Z ∈ [2c, 3c − 2]` is split as `⌈Z/2⌉ + ⌊Z/2⌋`, keeping both halves in
/// `[c, 2c − 1]`.
fn split_long_runs(starts: &[usize], n: usize, c: usize) -> Vec<usize> {
    let full = 2 * c - 1;
    let mut out = Vec::with_capacity(starts.len());
    for (i, &s) in starts.iter().enumerate() {
        let end = starts.get(i + 1).copied().unwrap_or(n);
        let run = end - s;
        out.push(s);
        if run <= full {
            continue;
        }
        let tail = run % full;
        let mut lens = vec![full; run / full];
        if tail >= c {
            lens.push(tail);
        } else if tail > 0 {
            let pool = full + tail;
            lens.pop();
            lens.push(pool.div_ceil(2));
            lens.push(pool / 2);
        }
        let mut pos = s;
        for &len in &lens[..lens.len() - 1] {
            pos += len;
            out.push(pos);
        }
    }
    out
}

/// Merges a first or last block shorter than `c` into its neighbour by
/// dropping the boundary between them. Merged end blocks may exceed
/// `2c − 1`; they are exempt from the interior bounds.
fn merge_short_ends(starts: &mut Vec<usize>, n: usize, c: usize) {
    if starts.len() >= 2 && starts[1] < c {
        starts.remove(1);
    }
    if starts.len() >= 2 && n - starts[starts.len() - 1] < c {
        starts.pop();
    }
}
