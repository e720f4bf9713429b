use thiserror::Error;

/// Errors raised by group, cochain, character and indicator computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap}")]
    SizeLimit { cap: usize },

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("not a coboundary: {0}")]
    NotACoboundary(String),

    #[error("exponent denominator {denominator} exceeds limit {limit}")]
    DenominatorLimit { denominator: i64, limit: i64 },

    /// A documented precondition of an operation was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An identity required of the input data fails at a concrete tuple.
    #[error("validation failed: {identity} at {tuple:?}")]
    Validation { identity: String, tuple: Vec<usize> },

    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
