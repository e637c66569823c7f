use thiserror::Error;

/// Errors produced by graph construction, parsing and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is disconnected: vertices {0} and {1} are unreachable from each other")]
    Disconnected(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("order {0} exceeds the graph6 short-format limit of 62")]
    OrderTooLarge(usize),
    #[error("vertex pair must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("distance parameter n must be at least 1")]
    ZeroDistance,
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("order {order} exceeds the envelope of {max}")]
    Envelope { order: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
