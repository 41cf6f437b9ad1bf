//! Exact and approximate edit distances with distortion analytics.
//!
//! The crate is organized around one question: how faithfully does a cheap
//! string distance track the true edit distance? It provides
//!
//! - [`strcore`]: alphabets, symbol strings, and the exact Levenshtein
//!   distance plus a brute-force verification oracle;
//! - [`ulam`]: distinctness checks and the alphabet expansion Σ → Σ^t that
//!   turns arbitrary strings into strings with all symbols distinct;
//! - [`approx`]: six approximation distances (two q-gram variants, two
//!   Ulam-metric embeddings, hierarchical block alignment, and
//!   shrink-then-block edit distance);
//! - [`distortion`]: empirical distortion over pair sets, bound-to-distortion
//!   conversion with monotonicity verification, and closed-form theoretical
//!   distortion curves;
//! - [`datasets`]: a reproducible random pair generator, FASTA ingestion with
//!   length bucketing, pair sampling, and a tab-separated pair-file format.
//!
//! All operations are pure functions over immutable values and safe to call
//! concurrently.

pub mod approx;
pub mod datasets;
pub mod distortion;
pub mod strcore;
pub mod ulam;

mod error;

pub use error::{Error, Result};
