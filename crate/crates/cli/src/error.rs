use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Everything a command can fail with, each mapped to a stable exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
    #[error(transparent)]
    Core(#[from] hamweave_core::Error),
    #[error("{0} check(s) failed:\n{1}")]
    Assertion(usize, String),
    #[error("best error {error} exceeds tolerance {tolerance}")]
    NotConverged { error: f64, tolerance: f64 },
}

impl CliError {
    pub fn parse(context: impl Into<String>, message: impl ToString) -> Self {
        Self::Parse {
            context: context.into(),
            message: message.to_string(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 io/other, 3 parse, 4 dimension or validation, 5 failed assertion,
    /// 6 search not converged. Usage errors exit with 2 from clap itself.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Io { .. } | Self::Csv(_) => 1,
            Self::Parse { .. } => 3,
            Self::Core(_) => 4,
            Self::Assertion(..) => 5,
            Self::NotConverged { .. } => 6,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
