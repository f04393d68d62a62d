use thiserror::Error;

/// Errors reported by the arithmetic and field-evaluation routines.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("inverse does not exist: {a} is not invertible modulo {m}")]
    NoInverse { a: i64, m: u64 },

    #[error("modulus must be odd, got {0}")]
    EvenModulus(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: u64, q: u64 },

    #[error("no closed form for this parity class: a={a}, b={b}, c={c}")]
    NoClosedForm { a: i64, b: u64, c: i64 },

    #[error("reciprocity hypothesis not met: ab and c must share parity (a={a}, b={b}, c={c})")]
    ParityMismatch { a: i64, b: u64, c: i64 },

    #[error("fractional distance must be a positive rational, got {p}/{q}")]
    InvalidDistance { p: u64, q: u64 },

    #[error("path-sum field diverges at zeta = 0")]
    PathAtGratingPlane,

    #[error("invalid carpet spec: {0}")]
    InvalidSpec(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
