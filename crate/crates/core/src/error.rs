use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("exponent overflow")]
    Overflow,
    #[error("colon by the zero ideal is undefined")]
    ZeroDivisor,
    #[error("operation requires a non-zero ideal")]
    ZeroIdeal,
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("operation requires two variables, ideal lives in {0}")]
    NotTwoVariables(usize),
    #[error("ideal is not stable")]
    NotStable,
    #[error("empty input set")]
    EmptyInput,
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("irreducible component needs at least one variable with positive exponent")]
    EmptySupport,
}

pub type Result<T> = std::result::Result<T, Error>;
