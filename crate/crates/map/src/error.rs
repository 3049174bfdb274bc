use crosskit_graph::GraphError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("malformed drawing: {0}")]
    Malformed(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("unknown edge: {0}")]
    UnknownEdge(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("{0} is not a neighbor of {1}")]
    NotANeighbor(String, String),
    #[error("goodness violation: {0}")]
    Goodness(String),
    #[error("bad interval: {0}")]
    BadInterval(String),
    #[error("wrong family: {0}")]
    WrongFamily(String),
    #[error("route error: {0}")]
    Route(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl MapError {
    pub fn code(&self) -> &'static str {
        match self {
            MapError::Malformed(_) => "MALFORMED",
            MapError::Schema { .. } => "SCHEMA_ERROR",
            MapError::UnknownEdge(_) => "UNKNOWN_EDGE",
            MapError::UnknownVertex(_) => "UNKNOWN_VERTEX",
            MapError::NotANeighbor(..) => "NOT_A_NEIGHBOR",
            MapError::Goodness(_) => "GOODNESS_VIOLATION",
            MapError::BadInterval(_) => "BAD_INTERVAL",
            MapError::WrongFamily(_) => "WRONG_FAMILY",
            MapError::Route(_) => "ROUTE_ERROR",
            MapError::Graph(g) => g.code(),
        }
    }

    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> MapError {
        MapError::Schema { path: path.into(), message: message.into() }
    }
}
