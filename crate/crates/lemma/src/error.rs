use crosskit_bounds::BoundsError;
use crosskit_graph::GraphError;
use crosskit_map::MapError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("the split set has odd size {0}")]
    OddP(usize),
    #[error("pipeline {pipeline} needs {needs}, got m = {m}, n = {n}")]
    WrongParity { pipeline: &'static str, needs: &'static str, m: usize, n: usize },
    #[error("wrong family: {0}")]
    WrongFamily(String),
    #[error("bad context: {0}")]
    BadContext(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

impl LemmaError {
    pub fn code(&self) -> &'static str {
        match self {
            LemmaError::OddP(_) => "ODD_P",
            LemmaError::WrongParity { .. } => "WRONG_PARITY",
            LemmaError::WrongFamily(_) => "WRONG_FAMILY",
            LemmaError::BadContext(_) => "BAD_CONTEXT",
            LemmaError::Construction(_) => "CONSTRUCTION_FAILED",
            LemmaError::Map(e) => e.code(),
            LemmaError::Graph(e) => e.code(),
            LemmaError::Bounds(e) => e.code(),
        }
    }
}
