use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{0}-{1} is not a cut edge")]
    NotACutEdge(usize, usize),
    #[error("{0}-{1} is a pendant edge")]
    PendantEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}, at least 3 required")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("invalid branch selection: {0}")]
    InvalidBranchSelection(String),
    #[error("malformed edge list: {0}")]
    Parse(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}
