use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix must have at least one row")]
    EmptyMatrix,
    #[error("matrix is singular (det = 0)")]
    SingularMatrix,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("exponent must be nonzero")]
    ZeroExponent,
    #[error("algebraic number is zero")]
    ZeroAlgebraic,
    #[error("argument is a root of unity")]
    RootOfUnity,
    #[error("modulus must be at least {0}")]
    InvalidModulus(u32),
    #[error("factorization does not match modulus {0}")]
    BadFactorization(String),
    #[error("not invertible modulo {0}")]
    NotInvertibleModN(String),
    #[error("invalid bound: {0}")]
    InvalidBound(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("matrix has finite order {0}; the gcd sequence degenerates")]
    FiniteOrder(String),
    #[error("precision limit of {0} bits reached without certification")]
    PrecisionExhausted(u32),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
