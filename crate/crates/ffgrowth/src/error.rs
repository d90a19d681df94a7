//! One error type for the whole crate; variants name the contract they break.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not irreducible over F_{1}")]
    NotIrreducible(Vec<u64>, u64),
    #[error("field size {q} exceeds the universe cap {cap}")]
    UniverseTooLarge { q: u128, cap: u64 },
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("empty set")]
    EmptySet,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("denominator set needs at least two elements")]
    DegenerateDenominator,
    #[error("X must be nonempty")]
    EmptyX,
    #[error("need at least one summand set")]
    NoSummands,
    #[error("epsilon must lie in {0}")]
    BadEpsilon(&'static str),
    #[error("exact search is limited to |X| <= {limit}, got {got}")]
    ExactSearchTooLarge { limit: usize, got: usize },
    #[error("unknown generation model: {0}")]
    BadModel(String),
    #[error("requested set size {n} is too large: {why}")]
    NTooLarge { n: usize, why: String },
    #[error("trials must be >= 1")]
    ZeroTrials,
    #[error("iterations must be >= 1")]
    ZeroIterations,
    #[error("{0}")]
    Infeasible(String),
    #[error("bad set file: {0}")]
    BadSetFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
