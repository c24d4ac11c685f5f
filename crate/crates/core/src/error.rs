//! Error types shared across the toolkit.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the optimizer toolkit.
///
/// `Config` covers invalid parameters and experiment setup (bad bounds,
/// missing data files, unknown function ids). `Usage` covers API misuse
/// such as arity mismatches or malformed permutations. The distinction
/// maps onto CLI exit codes: configuration/usage errors exit 1, I/O
/// errors exit 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
