use thiserror::Error;

/// Errors raised by the library and surfaced by the command-line tool.
///
/// Variants split into two families: requests that are mathematically
/// invalid (exit status 1) and internal consistency failures (exit status 2).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("q=1 blocks unsupported")]
    QOneBlocksUnsupported,
    #[error("operation requires q != 1 (e != 1)")]
    RequiresQNotOne,
    #[error("bad-witness: u_{j} != q^(n-1) u_{i}")]
    BadWitness { i: usize, j: usize },
    #[error("no-witness: no (t, a) solves the parameter relation")]
    NoWitness,
    #[error("parameters are not in the almost-semisimple regime")]
    NotInRegime,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("size-mismatch: block ranks {left} and {right} differ")]
    SizeMismatch { left: usize, right: usize },
    #[error("inconsistent-regime: {0}")]
    InconsistentRegime(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InconsistentRegime(_) | Error::Consistency(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
