use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Structural problems detected when freezing a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p influence <n> <m>` header")]
    MissingHeader,
    #[error("malformed header")]
    MalformedHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line")]
    MalformedLine,
    #[error("vertex index {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("threshold line for unknown vertex {0}")]
    UnknownVertexThreshold(usize),
    #[error("duplicate threshold line for vertex {0}")]
    DuplicateThreshold(usize),
    #[error("no threshold line for vertex {0}")]
    MissingThreshold(usize),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("thresholds violate the declared scheme: {0}")]
    SchemeViolation(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("search too large: {needed} candidates exceed the exploration cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { line, kind }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
