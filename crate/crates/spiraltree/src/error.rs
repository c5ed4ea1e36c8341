use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid restricting angle {0}: must satisfy 0 < alpha < pi/2")]
    InvalidAlpha(f64),

    #[error("spiral through the root is undefined")]
    SpiralAtRoot,

    #[error("point ({0:.6}, {1:.6} rad) is not reachable: no angle-restricted path exists")]
    NotReachable(f64, f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("instance too large for exhaustive oracle: {0}")]
    OracleLimit(String),

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Exit code used by the CLI: 2 precondition, 3 parse, 4 validation, 1 other.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precondition(_)
            | Error::InvalidAlpha(_)
            | Error::NotReachable(..)
            | Error::SpiralAtRoot
            | Error::OracleLimit(_) => 2,
            Error::Parse(_) => 3,
            Error::ValidationFailed(_) => 4,
            Error::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
