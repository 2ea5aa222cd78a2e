use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid vertex index {index} (graph has {count} vertices)")]
    InvalidVertex { index: usize, count: usize },

    #[error("invalid edge index {index} (graph has {count} edges)")]
    InvalidEdge { index: usize, count: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("inconsistent embedding: {0}")]
    Embedding(String),

    #[error("instance generation failed: {0}")]
    Generation(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("metric undefined: {0}")]
    UndefinedMetric(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
