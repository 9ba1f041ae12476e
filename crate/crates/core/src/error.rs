use thiserror::Error;

use crate::ordering::MinOrderViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not bipartite: odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },

    #[error("not one-directional: arc ({0}, {1}) runs from part B to part A")]
    NotOneDirectional(usize, usize),

    #[error("{what}: size {size} exceeds the exhaustive bound {bound}")]
    TooLarge { what: &'static str, size: u64, bound: u64 },

    #[error("ordering is not a permutation of the {n} vertices")]
    BadOrdering { n: usize },

    #[error("not a min ordering: {0}")]
    NotMinOrdering(MinOrderViolation),

    #[error("malformed model: {0}")]
    Structure(String),

    #[error("ray coordinates not normalized: {0}")]
    Normalization(String),

    #[error("families are inconsistent at vertices {0} and {1}")]
    Inconsistent(usize, usize),

    #[error("model does not realize the digraph: pair ({0}, {1}) differs")]
    ModelMismatch(usize, usize),

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("internal construction guard tripped: {0}")]
    Internal(String),
}
