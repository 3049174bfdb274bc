use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("wrong parity: {0}")]
    WrongParity(String),
    #[error("no crossing number available for {0}")]
    MissingValue(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl BoundsError {
    pub fn code(&self) -> &'static str {
        match self {
            BoundsError::WrongParity(_) => "WRONG_PARITY",
            BoundsError::MissingValue(_) => "MISSING_VALUE",
            BoundsError::Invalid(_) => "INVALID_ARGUMENT",
        }
    }
}
