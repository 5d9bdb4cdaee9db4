use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} needs {needed} items but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("coefficient {0} is not an integer")]
    NonIntegerCoefficient(String),
    #[error("coefficient {0} is negative")]
    NegativeCoefficient(String),
    #[error("pole at zero: denominator vanishes at 0")]
    PoleAtZero,
    #[error("property violated: {0}")]
    PropertyViolation(String),
    #[error("code is not self-orthogonal")]
    NotSelfOrthogonal,
    #[error("code is not self-dual")]
    NotSelfDual,
    #[error("no solution: {0}")]
    NoSolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
