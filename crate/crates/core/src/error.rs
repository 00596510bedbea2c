//! Crate-wide error type.

use std::fmt;

/// Errors produced by schedules, solvers, trainers and file formats.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation
    /// (time outside the schedule clip range, log-SNR outside the attainable
    /// interval, degenerate chord, ...).
    Domain(String),
    /// The call structure is invalid (empty grid, empty coupling, missing
    /// dependency between pipeline stages, ...).
    Usage(String),
    /// A numerical failure: NaN loss, non-SPD covariance, too many rejected
    /// samples.
    Numerical(String),
    /// A malformed file. `offset` is the byte offset at which parsing failed.
    Format { offset: usize, message: String },
    /// An underlying I/O failure, stringified.
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Numerical(msg) => write!(f, "numerical error: {msg}"),
            Error::Format { offset, message } => {
                write!(f, "format error at byte {offset}: {message}")
            }
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
