use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad pattern: {0}")]
    Pattern(String),
    #[error("too many edges to enumerate orientations: {edges} > {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("search budget exhausted")]
    Indeterminate,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
