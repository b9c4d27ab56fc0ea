use thiserror::Error;

/// Crate-wide error type. Every fallible public operation returns one of
/// these; budget exhaustion is always reported explicitly rather than
/// degrading into a wrong answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("characteristic mismatch: expected {expected}, got {got}")]
    CharMismatch { expected: u64, got: u64 },

    #[error("{0} is not prime (or outside the supported range 2..=2^31-1)")]
    NotPrime(u64),

    #[error("arity mismatch: {0} variables vs {1}")]
    ArityMismatch(usize, usize),

    #[error("exponent overflow in {0}")]
    Overflow(&'static str),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("unit ideal")]
    UnitIdeal,

    #[error("enumeration cap exceeded ({0} standard monomials)")]
    CapExceeded(usize),

    #[error("colon by zero ideal")]
    ColonByZero,

    #[error("ideal is not m-primary: {0}")]
    NotMPrimary(String),

    #[error("not a system of parameters: {0}")]
    NotParameterSequence(String),

    #[error("containment failure: {0}")]
    Containment(String),

    #[error("multiplicity not certified: {0}")]
    MultiplicityNotCertified(String),

    #[error("test element is zero")]
    ZeroTestElement,

    #[error("ring has dimension zero: {0}")]
    DimensionZero(String),

    #[error("sampling failed: {0}")]
    Sampling(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
