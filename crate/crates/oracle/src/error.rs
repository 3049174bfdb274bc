use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("edges {0} and {1} share an endpoint and cannot cross")]
    AdjacentPair(usize, usize),
    #[error("edges {0} and {1} are selected to cross twice")]
    DuplicatePair(usize, usize),
    #[error("no edge {0}")]
    UnknownEdge(usize),
    #[error("bad crossing order: {0}")]
    BadOrdering(String),
    #[error("no drawing with at most {} crossings; cr ≥ {at_least}", at_least - 1)]
    BudgetExceeded { at_least: usize },
    #[error("witness rejected: {0}")]
    BadWitness(String),
    #[error("malformed witness JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] crosskit_graph::GraphError),
    #[error(transparent)]
    Map(#[from] crosskit_map::MapError),
}

impl OracleError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            OracleError::AdjacentPair(..) => "ADJACENT_PAIR",
            OracleError::DuplicatePair(..) => "DUPLICATE_PAIR",
            OracleError::UnknownEdge(_) => "UNKNOWN_EDGE",
            OracleError::BadOrdering(_) => "BAD_ORDERING",
            OracleError::BudgetExceeded { .. } => "BUDGET_EXCEEDED",
            OracleError::BadWitness(_) => "BAD_WITNESS",
            OracleError::Json(_) => "BAD_JSON",
            OracleError::Graph(e) => e.code(),
            OracleError::Map(e) => e.code(),
        }
    }
}
