use thiserror::Error;

use crate::graph::EdgeId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge id {id} out of range for a graph with {m} edges")]
    InvalidEdgeId { id: EdgeId, m: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("matching is not maximum: an augmenting path exists")]
    NotMaximum,
    #[error("edges {first} and {second} are not disjoint, so they do not form a matching")]
    NotAMatching { first: EdgeId, second: EdgeId },
    #[error("edge set is not a strong clique: distance > 2 pair ({first}, {second})")]
    NotStrongClique { first: EdgeId, second: EdgeId },
    #[error("vertex {0} is not covered by the matching")]
    Unmatched(usize),
    #[error("{0}")]
    Precondition(String),
    #[error("{what}: {detail}")]
    TooLarge { what: &'static str, detail: String },
    #[error("invalid parameter: {0}")]
    Domain(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
