//! Error type shared by every layer of the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two values live in different rings.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("unknown variable `{0}`")]
    MissingVariable(String),

    #[error("matrix must have exactly 2 rows, found {0}")]
    WrongRowCount(usize),

    #[error("invalid matrix shape: {0}")]
    BadMatrixShape(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("division by zero: {0}")]
    ZeroDivisor(String),

    /// Codimension or similar asked of the unit ideal.
    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),

    /// The S-pair budget of the Groebner engine ran out.
    #[error("resource budget exhausted after {limit} S-pairs")]
    Budget { limit: u64 },

    /// Unprojection data failed a genericity precondition.
    #[error("genericity failure: {0}")]
    Genericity(String),

    /// A membership lift that the theory promises did not succeed.
    #[error("lift failed: {0}")]
    LiftFailed(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
