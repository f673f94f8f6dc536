use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {{{u}, {v}}} listed more than once")]
    DuplicateEdge { u: usize, v: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a valid odd cycle: {0}")]
    InvalidCycle(String),

    #[error("factor of order 1 must go through the trivial-factor path")]
    OrderOneFactor,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}
