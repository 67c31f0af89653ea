use thiserror::Error;

use crate::exactlin::LinalgError;
use crate::groupoid::GroupoidError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid groupoid: {0}")]
    Groupoid(#[from] GroupoidError),
    #[error("objects live in different categories")]
    CategoryMismatch,
    #[error("{op}: {detail}")]
    ObjectMismatch { op: &'static str, detail: String },
    #[error("block at grade {grade} has shape {found:?}, expected {expected:?}")]
    BlockShape {
        grade: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("{what} index {index} out of range (bound {bound})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("index set must be nonempty")]
    EmptyIndexSet,
    #[error("{0} must be nonzero")]
    ZeroInput(&'static str),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    /// A theorem-level invariant failed; indicates a bug in the engine.
    #[error("internal consistency violation: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
