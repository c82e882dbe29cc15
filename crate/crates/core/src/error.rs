use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension vector subtraction underflow: ({0},{1}) - ({2},{3})")]
    DimUnderflow(usize, usize, usize, usize),

    #[error("regular indecomposable R_n requires n >= 1")]
    ZeroRegular,

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("dimension vector {e:?} out of range for {context}")]
    OutOfRange { e: (usize, usize), context: String },

    #[error("empty variety: {0}")]
    EmptyVariety(String),

    #[error("malformed coefficient quiver: {0}")]
    MalformedQuiver(String),

    #[error("not a successor-closed subquiver: {0}")]
    NotSuccessorClosed(String),

    #[error("summand decomposition rejected: {0}")]
    InvalidSummands(String),

    #[error("index tuple violates constraints: {0}")]
    ConstraintViolation(String),

    #[error("q = {0} is not a prime <= 7")]
    UnsupportedField(u32),

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("inexact Laurent division: {0}")]
    InexactDivision(String),

    #[error("index {index} exceeds bound {bound}")]
    IndexBound { index: i64, bound: i64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
