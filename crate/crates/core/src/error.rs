use thiserror::Error;

/// Errors produced by construction, inversion, and the decision layer.
#[derive(Debug, Error)]
pub enum OlError {
    #[error("value must be non-negative and not NaN, got {0}")]
    InvalidValue(f64),

    #[error("expected a {expected} function for this operation")]
    WrongDirection { expected: &'static str },

    #[error("segment is not invertible: {0}")]
    NotInvertible(String),

    #[error("function is not monotone: {0}")]
    NotMonotone(String),

    #[error("invalid construction: {0}")]
    Invalid(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("numeric probe was inconclusive: {0}")]
    Inconclusive(String),

    #[error("bracketing failed: {0}")]
    Bracket(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operation refused: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, OlError>;
