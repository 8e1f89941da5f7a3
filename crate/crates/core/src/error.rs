use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at v = q^(-1/2) for q = {q}")]
    SpecializationPole { q: u32 },
    #[error("series constant term must be {expected}")]
    BadConstantTerm { expected: &'static str },
    #[error("{what} too large: {size} exceeds bound {bound}")]
    TooLarge {
        what: String,
        size: usize,
        bound: usize,
    },
    #[error("unsupported field size {0}: q must be a prime in {{2, 3, 5, 7}}")]
    BadPrime(u32),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
