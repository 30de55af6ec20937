//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("p = {0} is not prime")]
    CompositeP(u64),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("{divisor} does not divide {dividend}")]
    NotDivisor { divisor: u64, dividend: u64 },
    #[error("spectrum is not rational: trace histogram is not flat on nonzero residues")]
    NotRational,
    #[error("spectrum does not take exactly three values (it takes {0})")]
    NotThreeValued(usize),
    #[error("group ring elements live in different cyclic groups: {0} vs {1}")]
    MismatchedN(u64, u64),
    #[error("value spectrum is not in arithmetic progression")]
    NotAP,
    #[error("q = {0} is not a perfect square")]
    NotSquareQ(u64),
    #[error("middle value {got}, want (sqrt(q) - 1)/N with sqrt(q) = {sqrt_q}")]
    MidValueMismatch { got: i64, sqrt_q: u64 },
    #[error("cyclotomic classes are not closed under negation")]
    AsymmetricClasses,
    #[error("index sets do not partition 0..N")]
    InvalidPartition,
    #[error("base spectrum is not two-valued")]
    BaseNotTwoValued,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no representation 4p^h = b^2 + {0} c^2 with p coprime to bc")]
    BadDiscriminant(u64),
    #[error("parameters do not satisfy the index-2 hypotheses: {0}")]
    NotIndex2(String),
    #[error("no admissible decomposition found")]
    NoDecomposition,
    #[error("{quantity} is not an integer")]
    NonIntegral { quantity: &'static str },
    #[error("i/o: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
