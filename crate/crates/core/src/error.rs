use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("root isolation is undefined for the zero polynomial")]
    UndefinedIsolation,
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("not a generic line: {0}")]
    Genericity(String),
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
