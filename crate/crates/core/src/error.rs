//! Crate-wide error type.

use thiserror::Error;

use crate::field::FieldError;

/// Errors raised by constructions and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not closed under the bracket: {witness}")]
    NotClosed { witness: String },
    #[error("subspace is not stable under ad h: {witness}")]
    NotStable { witness: String },
    #[error("ad h does not act semisimply with integer eigenvalues on the subspace")]
    NotSemisimple,
    #[error("subspace is not an ideal: {witness}")]
    NotIdeal { witness: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid algebra parameters: {0}")]
    InvalidAlgebra(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("odd bracket solver: {0}")]
    Solver(String),
    #[error("unknown orbit label `{0}`")]
    UnknownLabel(String),
}

/// Result alias using [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
