//! Command-line front end for `gysin-core`: report builders, input formats
//! and the built-in self-check.

pub mod checks;
pub mod input;
pub mod report;
pub mod zoo;

use gysin_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("instance too large: model dimension {dim} exceeds cap {cap}")]
    Cap { dim: usize, cap: usize },
    #[error("{0}")]
    Core(Error),
    #[error("self-check failed")]
    Selfcheck,
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InstanceTooLarge { dim, cap } => CliError::Cap { dim, cap },
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cap { .. } => 2,
            CliError::Selfcheck => 3,
            _ => 1,
        }
    }
}
