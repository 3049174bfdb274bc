use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Schema { path: String, code: &'static str, message: String },
    /// The request itself is inadmissible (bad spec, wrong family, ...).
    #[error("{message}")]
    Rejected { code: &'static str, message: String },
    /// A computation failed or an assertion did not hold.
    #[error("{message}")]
    Failed { code: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Read { .. } | CliError::Schema { .. } | CliError::Rejected { .. } => 2,
            CliError::Write { .. } | CliError::Failed { .. } => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "USAGE",
            CliError::Read { .. } => "READ_FAILED",
            CliError::Write { .. } => "WRITE_FAILED",
            CliError::Schema { code, .. } | CliError::Rejected { code, .. } | CliError::Failed { code, .. } => code,
        }
    }

    pub(crate) fn rejected(code: &'static str, message: impl ToString) -> CliError {
        CliError::Rejected { code, message: message.to_string() }
    }

    pub(crate) fn failed(code: &'static str, message: impl ToString) -> CliError {
        CliError::Failed { code, message: message.to_string() }
    }
}

impl From<crosskit_graph::GraphError> for CliError {
    fn from(e: crosskit_graph::GraphError) -> CliError {
        CliError::rejected(e.code(), e)
    }
}

impl From<crosskit_gen::GenError> for CliError {
    fn from(e: crosskit_gen::GenError) -> CliError {
        CliError::rejected(e.code(), e)
    }
}

impl From<crosskit_bounds::BoundsError> for CliError {
    fn from(e: crosskit_bounds::BoundsError) -> CliError {
        CliError::rejected(e.code(), e)
    }
}

impl From<crosskit_map::MapError> for CliError {
    fn from(e: crosskit_map::MapError) -> CliError {
        match e.code() {
            code @ ("UNKNOWN_VERTEX" | "UNKNOWN_EDGE" | "NOT_A_NEIGHBOR" | "WRONG_FAMILY" | "BAD_INTERVAL") => {
                CliError::rejected(code, e)
            }
            code => CliError::failed(code, e),
        }
    }
}

/// Precondition failures are the caller's fault; anything else means a
/// construction did not go through.
impl From<crosskit_lemma::LemmaError> for CliError {
    fn from(e: crosskit_lemma::LemmaError) -> CliError {
        match e.code() {
            code
            @ ("ODD_P" | "WRONG_PARITY" | "WRONG_FAMILY" | "BAD_CONTEXT" | "UNKNOWN_VERTEX" | "NOT_A_NEIGHBOR") => {
                CliError::rejected(code, e)
            }
            code => CliError::failed(code, e),
        }
    }
}
