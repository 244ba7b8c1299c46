use thiserror::Error;

use crate::arith::GaussianRational;

/// Errors raised by the sequence engine and its command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("seed components a, b, c must not all be zero")]
    AllZeroSeed,

    #[error("invalid q = {q}: must be at least {min}")]
    InvalidQ { q: u64, min: u64 },

    /// The closed form of the geometric sum divides by `term(m+1) - term(m)`,
    /// which vanishes here. The left-hand side is still available.
    #[error("degenerate ratio at m = {m}: term(m+1) = term(m); direct sum is {lhs}")]
    DegenerateRatio { m: u64, lhs: Box<GaussianRational> },

    #[error("bad range: {0}")]
    BadRange(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("series length must be at least 1")]
    EmptySeries,

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
