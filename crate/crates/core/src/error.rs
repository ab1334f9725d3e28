use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    Context(String),
    #[error("monomial does not divide: {0}")]
    NotDivisible(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("signature of a zero vector is undefined")]
    ZeroSignature,
    #[error("critical pair with a zero polynomial")]
    ZeroPair,
    #[error("operation requires an instrumented engine run")]
    Uninstrumented,
    #[error("admissibility violated at signature {sig}: {detail}")]
    Admissibility { sig: String, detail: String },
    #[error("engine exceeded its pair budget of {0}")]
    PairBudget(usize),
    #[error("inconsistent standard forms for signature {0}")]
    InconsistentStandardForms(String),
    #[error("representation failed: {0}")]
    Representation(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
