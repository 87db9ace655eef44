use thiserror::Error;

/// Errors produced by ring construction, arithmetic and the orbit machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("row is empty")]
    EmptyRow,
    #[error("row is not unimodular")]
    NotUnimodular,
    #[error("row is not unimodular and congruent to e1 modulo the ideal")]
    NotRelUnimodular,
    #[error("operation requires a finite ring")]
    InfiniteRing,
    #[error("search budget of {0} exhausted")]
    BudgetExceeded(usize),
    #[error("elementary generator needs distinct indices, got i = j = {0}")]
    DiagonalIndex(usize),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix of odd size {0} has no symplectic structure")]
    OddSize(usize),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("representatives do not share the last n-1 coordinates")]
    TailMismatch,
    #[error("no w1 with v1*w1 = 1 modulo the tail")]
    NoModularInverse,
    #[error("no unimodularity witness of degree <= {0}")]
    NoWitnessWithinBound(usize),
    #[error("unsupported base ring: {0}")]
    UnsupportedBase(String),
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("breadth-first search failed: {0}")]
    BfsFailure(String),
    #[error("element {0} does not lie in the ideal")]
    NotInIdeal(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
