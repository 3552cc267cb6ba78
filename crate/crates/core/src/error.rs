use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// Mathematical failures that a caller is expected to inspect (a structure
/// failing validation, an axiom not holding) are reported through
/// [`crate::report::Report`] instead; the variants here are precondition
/// violations and integrality failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("{value} is not an element of {ring}")]
    NotAMember { value: String, ring: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("polynomial is not symmetric in {0}")]
    NotSymmetric(String),

    #[error("non-integral coefficient in {what}: {value}")]
    NonIntegral { what: String, value: String },

    #[error("composition bound exceeded: {m}*{n} > {bound}")]
    BoundExceeded { m: usize, n: usize, bound: usize },

    #[error("inner series has nonzero constant term")]
    NonzeroConstantTerm,

    #[error("linear coefficient {0} is not a unit")]
    NotAUnit(String),

    #[error("prime {0} is outside the prime window")]
    PrimeOutsideWindow(u64),

    #[error("not a lambda-ring under these Adams data: {0}")]
    NotLambdaRing(String),

    #[error("{0} is not {1}-divisible")]
    NotDivisible(String, u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("missing generator value v{0}")]
    MissingValue(String),

    #[error("relation violated: {0}")]
    RelationViolation(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("prime window mismatch")]
    WindowMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
