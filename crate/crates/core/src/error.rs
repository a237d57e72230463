use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{n} vertices requested, at most 64 are supported")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: Vertex },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Failures of the invariant and v-number computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// Input violates the precondition of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input is valid but larger than the exact search supports.
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    /// Two routes that must agree returned different values.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
