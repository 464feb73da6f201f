use thiserror::Error;

use crate::graph::DiagonalMode;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("expected a {expected} graph, got a {found} one")]
    ModeMismatch {
        expected: DiagonalMode,
        found: DiagonalMode,
    },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("not a permutation of 0..{n}: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("graph on {n} vertices exceeds the supported bound of {max} for {what}")]
    TooLarge { n: usize, max: usize, what: &'static str },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("missing corpus: {0}")]
    MissingCorpus(String),

    #[error("internal defect: {0}")]
    InternalDefect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
