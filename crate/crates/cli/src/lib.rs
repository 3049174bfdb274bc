//! The `crosskit` command line: one verb per capability of the toolkit,
//! deterministic given its flags and seed.
//!
//! Exit codes: 0 when every requested check passed, 1 when a check or
//! computation failed, 2 when the request could not be parsed or read.

mod args;
mod commands;
mod error;
mod verify;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::Parser;
use serde_json::{json, Value};

pub use args::Cli;
pub use error::CliError;

/// Seed used when neither `--seed` nor `CROSSKIT_SEED` is given.
pub const DEFAULT_SEED: u64 = 1729;

/// Environment variable overriding [`DEFAULT_SEED`].
pub const SEED_ENV: &str = "CROSSKIT_SEED";

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutcome {
    pub code: i32,
    /// Files written.
    pub artifacts: Vec<PathBuf>,
    /// Human-readable summary.
    pub summary: String,
    /// Machine-readable body.
    pub json: Value,
    /// Primary output for stdout when no file was requested.
    pub output: Option<String>,
}

impl CommandOutcome {
    pub(crate) fn new(pass: bool, summary: impl Into<String>, json: Value) -> CommandOutcome {
        CommandOutcome {
            code: if pass { 0 } else { 1 },
            artifacts: Vec::new(),
            summary: summary.into(),
            json,
            output: None,
        }
    }

    fn from_error(e: &CliError) -> CommandOutcome {
        CommandOutcome {
            code: e.exit_code(),
            artifacts: Vec::new(),
            summary: format!("error [{}]: {e}", e.code()),
            json: json!({ "error": e.code(), "message": e.to_string() }),
            output: None,
        }
    }
}

/// Runtime context shared by the commands.
pub(crate) struct Ctx {
    pub seed: u64,
}

/// Parses `argv` (including the program name) and runs the command. `env_seed`
/// is the value of `CROSSKIT_SEED`, if set.
pub fn run<I, T>(argv: I, env_seed: Option<&str>) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandOutcome {
                code,
                artifacts: Vec::new(),
                summary: e.to_string(),
                json: json!({ "error": "USAGE", "message": e.to_string() }),
                output: None,
            };
        }
    };
    let json_mode = cli.json;
    let outcome = resolve_seed(cli.seed, env_seed).and_then(|seed| commands::dispatch(cli.command, &Ctx { seed }));
    let mut outcome = outcome.unwrap_or_else(|e| CommandOutcome::from_error(&e));
    if json_mode && outcome.output.is_none() {
        outcome.output = Some(serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize"));
    }
    outcome
}

fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64, CliError> {
    match (flag, env) {
        (Some(s), _) => Ok(s),
        (None, Some(text)) => {
            text.trim().parse().map_err(|_| CliError::Usage(format!("{SEED_ENV}={text:?} is not an unsigned integer")))
        }
        (None, None) => Ok(DEFAULT_SEED),
    }
}

pub(crate) fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })
}

pub(crate) fn write_file(path: &Path, text: &str) -> Result<PathBuf, CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.display().to_string(), source })?;
    Ok(path.to_path_buf())
}

pub(crate) fn load_drawing(path: &Path) -> Result<crosskit_map::Drawing, CliError> {
    let bytes = read_file(path)?;
    crosskit_map::decode(&bytes).map_err(|e| CliError::Schema {
        path: path.display().to_string(),
        code: e.code(),
        message: e.to_string(),
    })
}
