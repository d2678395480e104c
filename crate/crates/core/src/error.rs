use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("adjacency bound must be at least 1")]
    InvalidConstraint,

    #[error(
        "n = {n} exceeds the brute-force ceiling {ceiling}; use a closed form or recurrence engine"
    )]
    CeilingExceeded { n: usize, ceiling: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index p = {p} out of range 1..={max} for n = {n}")]
    IndexOutOfRange { p: usize, n: usize, max: usize },

    #[error("insufficient data: need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("no dominant characteristic root: {0}")]
    NoDominantRoot(String),

    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),

    #[error("invalid generating function: {0}")]
    InvalidGf(String),

    #[error("C*alpha^n overflows binary64 at n = {0}; use the log-space value")]
    Overflow(usize),
}
