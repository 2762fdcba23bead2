use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum BkmError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported Bessel order {0} (integer or half-integer orders up to {max} only)", max = crate::specfun::MAX_ORDER)]
    UnsupportedOrder(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("knots {first} and {second} coincide")]
    DuplicateKnot { first: usize, second: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular (pivot {pivot:e} at column {column})")]
    Singular { column: usize, pivot: f64 },
    #[error("matrix is numerically singular: condition estimate {estimate:e} exceeds {limit:e}")]
    NearSingular { estimate: f64, limit: f64 },
    #[error("cannot place {requested} points inside the domain (found {available})")]
    InsufficientPoints { requested: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, BkmError>;
