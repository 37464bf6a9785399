use std::io;

use thiserror::Error;

use creator_game::{EmitError, GameError};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad scenario content or arguments; `path` names the offending key.
    #[error("invalid scenario at `{path}`: {message}")]
    Invalid { path: String, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("solver error: {0}")]
    Game(#[from] GameError),

    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Invalid { .. } | CliError::Usage(_) | CliError::Game(_) => 2,
            CliError::ChecksFailed { .. } => 3,
        }
    }

    pub(crate) fn from_emit(e: EmitError, path: &str) -> Self {
        match e {
            EmitError::Io(source) => CliError::Io {
                path: path.to_string(),
                source,
            },
            other => CliError::Usage(other.to_string()),
        }
    }
}
