use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime in [3, 2^31)")]
    NotPrime(u64),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("element is not a unit (constant term is zero)")]
    NonUnit,
    #[error("x = {0} is degenerate (x must avoid 0 and 1)")]
    DegenerateX(u64),
    #[error("t = {0} is excluded (t must avoid 0, 1 and -1)")]
    ExcludedT(u64),
    #[error("augmentation is zero: element is divisible by 1 - zeta")]
    DivisibleByOneMinusZeta,
    #[error("index {index} out of range (valid: {min}..={max})")]
    IndexRange { index: usize, min: usize, max: usize },
    #[error("norm is not coprime to n = {0}")]
    NonCoprimeNorm(String),
    #[error("indefinite forms (positive discriminant) are not supported")]
    IndefiniteUnsupported,
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("duplicate audit entry: {0}")]
    DuplicateEntry(String),
    #[error("form order exceeds the iteration limit {0}")]
    OrderLimit(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
