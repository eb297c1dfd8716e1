use thiserror::Error;

/// Errors raised by the exact series and sequence routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has a zero constant term")]
    ZeroConstantTerm,

    #[error("unsupported method: {0}")]
    UnsupportedMethod(String),

    #[error("value is not an exact rational: {0}")]
    NotRepresentable(String),

    #[error("matrix is singular")]
    Singular,

    #[error("tower determinant requires a unit-diagonal base")]
    UnsupportedBase,

    #[error("degenerate case: {0}")]
    DegenerateCase(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed value: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
