use thiserror::Error;

/// Errors produced by graph construction, parsing and the exact searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a path")]
    NotAPath,
    #[error(
        "exact search refused: n = {n} exceeds the limit of {limit} (raise it with --max-exact)"
    )]
    GuardExceeded { n: usize, limit: usize },
    #[error("tree enumeration supports 1 <= n <= {max}, got {n}")]
    TreeSizeUnsupported { n: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("independent methods disagree: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
