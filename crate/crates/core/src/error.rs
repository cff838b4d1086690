use thiserror::Error;

/// Errors raised by the arithmetic, outlaw, enumeration and certified-bound engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("denominator must be non-zero")]
    ZeroDenominator,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("rational must exceed 1, got {0}")]
    NotAboveOne(String),
    #[error("{0} is not an even perfect number")]
    NotEvenPerfect(u64),
    #[error("value {0} does not fit the supported 64-bit range")]
    TooLarge(String),
    #[error("limit {limit} exceeds the brute-force ceiling {max}")]
    LimitTooLarge { limit: u64, max: u64 },
    #[error("precision {0} outside the supported range 10..=1000 digits")]
    PrecisionOutOfRange(u32),
    #[error("n = {0} is too small: ln ln n must be positive")]
    DomainTooSmall(u64),
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
