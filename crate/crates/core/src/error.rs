use thiserror::Error;

/// Errors produced by graph construction, the position oracles and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("resource limit exceeded: {0}")]
    BudgetExceeded(String),
    #[error("malformed colouring: {0}")]
    MalformedColouring(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A construction or certificate translation produced something the
    /// oracles reject. Always a bug.
    #[error("internal verification failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
