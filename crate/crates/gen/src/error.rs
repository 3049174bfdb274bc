use crosskit_graph::GraphError;
use crosskit_map::MapError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("degenerate layout: {reason} at {}", .witness.join(", "))]
    DegenerateLayout { reason: String, witness: Vec<String> },
    #[error("coordinate {0} is outside the supported range ±{limit}", limit = crate::COORD_LIMIT)]
    CoordinateRange(i64),
    #[error("layout does not fit the graph: {0}")]
    LayoutShape(String),
    #[error("no generator for {what} with sizes ({m}, {n}); supported: {supported}")]
    UnsupportedSize { what: &'static str, m: usize, n: usize, supported: String },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl GenError {
    pub fn code(&self) -> &'static str {
        match self {
            GenError::DegenerateLayout { .. } => "DEGENERATE_LAYOUT",
            GenError::CoordinateRange(_) => "COORDINATE_RANGE",
            GenError::LayoutShape(_) => "MALFORMED",
            GenError::UnsupportedSize { .. } => "UNSUPPORTED_SIZE",
            GenError::Map(e) => e.code(),
            GenError::Graph(e) => e.code(),
        }
    }
}
