//! Six approximation distances for the exact edit distance.
//!
//! Two q-gram profile distances ([`baryossef_distance`] unnormalized,
//! [`sokolov_distance`] sentinel-padded and length-normalized), two distances
//! on strings with all-distinct symbols ([`charikar_distance`] via inverse
//! position differences, [`andoni09_distance`] via predecessor windows),
//! a hierarchical block-alignment cost ([`andoni10_distance`]), and a
//! shrink-then-block edit distance ([`batu_distance`]).
//!
//! Every distance is a pure function: non-negative, zero on equal inputs,
//! and reentrant. All are symmetric except possibly the block-alignment
//! cost, which callers should treat as directed.

mod andoni09;
mod andoni10;
mod batu;
mod charikar;
mod qgram;

pub use andoni09::andoni09_distance;
pub use andoni10::andoni10_distance;
pub use batu::{batu_distance, batu_shrink, BlockString};
pub use charikar::charikar_distance;
pub use qgram::{baryossef_distance, qgram_profile, sokolov_distance, QGramProfile};

use crate::{Error, Result};

/// Gram length for the q-gram distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QGramParams {
    q: usize,
}

impl QGramParams {
    /// Errors unless `q ≥ 1`.
    pub fn new(q: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidInput("gram length q must be at least 1".into()));
        }
        Ok(Self { q })
    }

    /// The gram length.
    pub fn q(&self) -> usize {
        self.q
    }
}

/// Block parameter `c` and number of alphabet reductions `j` for the
/// shrink-based distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatuParams {
    c: usize,
    j: usize,
}

impl BatuParams {
    /// Errors unless `c ≥ 2` and `j ≥ 1`.
    pub fn new(c: usize, j: usize) -> Result<Self> {
        if c < 2 {
            return Err(Error::InvalidInput(format!(
                "block parameter c must be at least 2, got {c}"
            )));
        }
        if j == 0 {
            return Err(Error::InvalidInput(
                "reduction count j must be at least 1".into(),
            ));
        }
        Ok(Self { c, j })
    }

    /// The block parameter: interior blocks have length in `[c, 2c−1]`.
    pub fn c(&self) -> usize {
        self.c
    }

    /// Number of alphabet-reduction rounds.
    pub fn j(&self) -> usize {
        self.j
    }
}

/// Parameters of the hierarchical block-alignment cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HierAlignParams {
    base_len: usize,
    prune_width: Option<usize>,
}

impl HierAlignParams {
    /// `base_len` is the block length at the recursion base (a power of two);
    /// `prune_width` caps how many shift candidates are kept per block, with
    /// `None` meaning no pruning. Errors unless `base_len` is a power of two
    /// and `prune_width`, when given, is at least 1.
    pub fn new(base_len: usize, prune_width: Option<usize>) -> Result<Self> {
        if base_len == 0 || !base_len.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "base block length must be a power of two, got {base_len}"
            )));
        }
        if prune_width == Some(0) {
            return Err(Error::InvalidInput(
                "prune width must be at least 1".into(),
            ));
        }
        Ok(Self {
            base_len,
            prune_width,
        })
    }

    /// Block length at the recursion base.
    pub fn base_len(&self) -> usize {
        self.base_len
    }

    /// Maximum number of shift candidates per block (`None` = unpruned).
    pub fn prune_width(&self) -> Option<usize> {
        self.prune_width
    }
}

impl Default for HierAlignParams {
    /// Single-symbol base blocks, no pruning.
    fn default() -> Self {
        Self {
            base_len: 1,
            prune_width: None,
        }
    }
}
