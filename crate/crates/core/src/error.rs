use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("divisor series has a zero constant term")]
    ZeroConstantTerm,
    #[error("coefficient {index} of the EGF is not integral after scaling by n!")]
    NonIntegral { index: usize },
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("row {n} is outside the triangle (n_max = {n_max})")]
    RowOutOfRange { n: usize, n_max: usize },
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("interval is empty: lower endpoint must be below upper endpoint")]
    EmptyInterval,
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence has no positive entry")]
    AllZero,
    #[error("polynomial has a negative coefficient at degree {0}")]
    NegativeCoefficient(usize),
    #[error("p(1) must be positive")]
    NonPositiveAtOne,
    #[error("logarithm of a non-positive integer")]
    NonPositiveLog,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
