use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("argument {0} lies outside [0, 1)")]
    OutOfUnitInterval(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("the empty continued fraction has no alternate form")]
    EmptyExpansion,

    #[error("partial quotient does not fit in 64 bits")]
    QuotientOverflow,

    #[error("integer {n} outside the Ostrowski range [0, {modulus})")]
    OutsideOstrowskiRange { n: u64, modulus: u64 },

    #[error("invalid Ostrowski digits: {0}")]
    InvalidDigits(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("the limit at {0} from the relevant side is infinite")]
    InfiniteLimit(String),

    #[error("{d} is a perfect square")]
    PerfectSquare { d: i128 },

    #[error("unknown quadratic irrational {0:?}")]
    UnknownSurd(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("empty sample")]
    EmptySample,

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
