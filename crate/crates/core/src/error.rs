use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operator index {index} out of range for a {dim}-simplex")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("monotone map does not fit: {0}")]
    RangeMismatch(String),

    #[error("invalid surjection {values:?}: {reason}")]
    InvalidSurjection { values: Vec<usize>, reason: String },

    #[error("surjection {0:?} is not 1-biased")]
    NotOneBiased(Vec<usize>),

    #[error("surjection {0:?} is not strongly biased")]
    NotStronglyBiased(Vec<usize>),

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("degree {needed} exceeds the truncation window {window}")]
    TruncationExceeded { needed: i64, window: i64 },

    #[error("algebra is not graded commutative: {0}")]
    NotCommutative(String),

    #[error("coalgebra is not connected: {0}")]
    NotConnected(String),

    #[error("homology requested at the window edge (degree {0})")]
    WindowEdge(i64),

    #[error("coefficient ring {0} is not a field")]
    NotField(String),

    #[error("invalid simplicial poset: {}", .0.join("; "))]
    InvalidPoset(Vec<String>),

    #[error("subposets do not cover: {0}")]
    NotACover(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bounds exceed hard limits: {0}")]
    LimitsExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
