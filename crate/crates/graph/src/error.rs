use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parts: {0}")]
    InvalidParts(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid edge {0}-{1}: {2}")]
    InvalidEdge(String, String, &'static str),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl GraphError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            GraphError::InvalidParts(_) => "INVALID_PARTS",
            GraphError::UnknownVertex(_) => "UNKNOWN_VERTEX",
            GraphError::DuplicateLabel(_) => "DUPLICATE_LABEL",
            GraphError::InvalidEdge(..) => "INVALID_EDGE",
            GraphError::Parse { .. } => "PARSE_ERROR",
        }
    }
}
