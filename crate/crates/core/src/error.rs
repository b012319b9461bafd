use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed adjacency matrix: {0}")]
    AdjacencyMatrix(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("{u}{v} is already an edge")]
    AlreadyEdge { u: usize, v: usize },
    #[error("{u}{v} is an edge, expected a nonedge")]
    ExpectedNonedge { u: usize, v: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("empty input: {0}")]
    Empty(String),
    #[error("builders are incompatible: {0}")]
    Incompatible(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
