//! Process-level error classes and their exit codes.
//!
//! Every failure is sorted into one of three classes so scripts can react
//! mechanically: usage errors (bad flags or configuration, exit 2), data
//! errors (unreadable or malformed inputs, impossible requests against
//! valid data, exit 3), and internal errors (invariants this binary itself
//! must uphold, exit 4).

use std::fmt;

/// A classified failure; the class decides the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// The invocation itself is wrong: flags, configuration, parameters.
    Usage(String),
    /// The inputs cannot be read or do not hold the promised shape.
    Data(String),
    /// A supposedly impossible state; always worth a bug report.
    Internal(String),
}

impl CliError {
    /// Exit code contract: 2 usage, 3 data, 4 internal (0 is success).
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Data(msg) => write!(f, "{msg}"),
            CliError::Internal(msg) => write!(f, "internal: {msg}"),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Wraps a message as a usage error.
pub fn usage(msg: impl fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

/// Wraps a message as a data error.
pub fn data(msg: impl fmt::Display) -> CliError {
    CliError::Data(msg.to_string())
}

/// Wraps a message as an internal error.
pub fn internal(msg: impl fmt::Display) -> CliError {
    CliError::Internal(msg.to_string())
}
