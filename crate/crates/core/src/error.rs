use thiserror::Error;

/// Errors raised by graph construction, parsing, and the gadget builders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("vertex {0} is not in the coloring's domain")]
    NotInDomain(usize),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("brute force would enumerate {0} colorings, above the cap of {1}")]
    OracleCapExceeded(u128, u128),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
