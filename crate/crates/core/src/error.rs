use thiserror::Error;

/// Errors surfaced by the dimension pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("relation is not multihomogeneous: mixes multidegrees {0} and {1}")]
    NotHomogeneous(String, String),

    #[error("relation evaluates to zero")]
    ZeroRelation,

    #[error("malformed relation: {0}")]
    InvalidRelation(String),

    #[error("not a Lie element: leading monomial `{0}` is not a Lyndon word")]
    NotLieElement(String),

    #[error("standard factorization needs a Lyndon word of length >= 2, got `{0}`")]
    NotLyndon(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("presentation has no generators")]
    EmptyAlphabet,

    #[error("relation has W-degree {0}; the elimination engine requires W-degree 0 or 1")]
    WDegreeTooHigh(u32),

    #[error("graded component at degree {degree} has dimension {dim}, above the limit {limit}")]
    ComponentTooLarge {
        degree: String,
        dim: usize,
        limit: usize,
    },

    #[error("solved dimension at degree {degree} is {value}, not a nonnegative integer")]
    NonIntegralDimension { degree: String, value: String },

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidMatrix(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
