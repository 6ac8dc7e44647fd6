use thiserror::Error;

use crate::io::FormatError;

/// Errors raised by solvers, reductions and validators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} is {value}, above the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error(
        "arity {arity} is not supported by the subset DP: only arity <= 3 admits an O*(2^n) algorithm"
    )]
    UnsupportedArity { arity: usize },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error(transparent)]
    Format(#[from] FormatError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
