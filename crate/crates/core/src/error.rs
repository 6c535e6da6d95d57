use thiserror::Error;

/// Errors raised by the algebraic operations and the text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("series is not a unit: constant term is zero")]
    NonUnit,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("variable index {index} out of range for {num_vars} variables")]
    VarIndex { index: usize, num_vars: usize },

    #[error("invalid algebra configuration: {0}")]
    InvalidConfig(String),

    #[error("configuration mismatch: L({0},{1}) vs L({2},{3})")]
    ConfigMismatch(usize, u32, usize, u32),

    #[error("coordinates are not in the image of the embedding: {0}")]
    NotInImage(String),

    #[error("matrix is not in I + S: {0}")]
    NotInS(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidConfig(_) => 1,
            Error::Internal(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
