//! Library half of the `stickygap` binary: argument types, command
//! execution and output encoding.

pub mod args;
pub mod commands;
pub mod format;
pub mod record;

use std::io::Write;
use std::path::Path;

pub use args::Cli;
pub use commands::{execute, Outcome, M_MAX_ENV};
pub use record::{OutputRecord, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Output { .. } => 4,
        }
    }
}

impl From<stickygap::Error> for CliError {
    fn from(e: stickygap::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Numeric(e.to_string())
        }
    }
}

pub fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Output {
        path: path.display().to_string(),
        source,
    })
}

/// Runs a parsed command and writes its output to `--out` or `stdout`.
pub fn run(cli: Cli, m_max_env: Option<&str>, stdout: &mut impl Write) -> Result<(), CliError> {
    let outcome = execute(cli.command, m_max_env)?;
    let text = outcome.render();
    match outcome.destination() {
        Some(path) => write_output(path, &text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Output {
                path: "<stdout>".into(),
                source,
            }),
    }
}
