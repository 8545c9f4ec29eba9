use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge #{index} is a loop at vertex {vertex}")]
    Loop { index: usize, vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {n} vertices, limit here is {max}")]
    TooLarge { n: usize, max: usize },

    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),

    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not matching covered")]
    NotMatchingCovered,

    #[error("edge {0} is admissible")]
    AdmissibleEdge(EdgeId),

    #[error("splice: {0}")]
    Splice(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural statement that is supposed to hold did not.
    #[error("inconsistent structure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
