use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A weight component is zero/overflowing, or a claimed weight system is inconsistent.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    /// A matrix violates the preconditions of an operation
    /// (negative exponents, zero determinant, ...).
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// A text input (weight list, CLI argument) failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A value left the range supported by a fixed-width representation.
    #[error("value out of supported range: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;
