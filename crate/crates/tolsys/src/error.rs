//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two operands act on point sets of different sizes.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An input value violates a structural invariant (symmetry,
    /// reflexivity, zero diagonal, triangle inequality, support, ...).
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// A matrix expected to be hermitian deviates beyond tolerance.
    #[error(
        "matrix is not hermitian: max deviation {deviation:.3e} exceeds tolerance {tolerance:.3e}"
    )]
    NotHermitian { deviation: f64, tolerance: f64 },

    /// An input file does not match its schema.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// An iterative solver exhausted its budget without reaching the
    /// requested residual.
    #[error("solver did not converge: residual {residual:.3e} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: usize },

    /// The operation requires a connected relation.
    #[error("relation is disconnected: {0}")]
    Disconnected(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
