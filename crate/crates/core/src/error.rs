//! The crate-wide error type.

/// Errors reported by any operation in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two strings passed to a binary operation use different alphabets.
    #[error("inputs use different alphabets")]
    AlphabetMismatch,

    /// An operation requiring equal-length inputs received unequal lengths.
    #[error("inputs must have equal length (got {left} and {right})")]
    LengthMismatch { left: usize, right: usize },

    /// The brute-force oracle was called with a string over its length cap.
    #[error("input length {len} exceeds the oracle cap of {cap}")]
    OracleCap { len: usize, cap: usize },

    /// A precondition on argument values was violated.
    #[error("{0}")]
    InvalidInput(String),

    /// An input that must have all-distinct symbols repeats a symbol.
    #[error("input is not a Ulam string: a symbol occurs more than once")]
    NotUlam,

    /// Expansion was requested at an order whose grams are not distinct.
    #[error("the {t}-grams of the input are not pairwise distinct")]
    NonDistinctGrams { t: usize },

    /// No such expansion order exists for the pair.
    #[error("no joint expansion order: the pair needs t = {required} but the shorter string has length {shorter}")]
    NoJointExpansion { required: usize, shorter: usize },

    /// A distortion computation was given no usable samples.
    #[error("no sample has exact distance at or above theta = {theta}")]
    NoSamples { theta: f64 },

    /// A structured text input (pair file, FASTA) is malformed.
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    /// An underlying I/O operation failed.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
