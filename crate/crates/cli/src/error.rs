use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes, one class per failure kind.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    /// Reserved for argument errors reported by clap.
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const VALIDATION: i32 = 4;
    pub const LIMIT: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed file content; `line` is 1-based.
    #[error("{origin}:{line}: {message}")]
    Parse { origin: String, line: usize, message: String },

    #[error("{0}")]
    Validation(String),

    #[error(transparent)]
    Model(#[from] proxrecall_core::Error),

    #[error("malformed report document: {0}")]
    Document(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Parse { .. } | CliError::Document(_) => exit::PARSE,
            CliError::Validation(_) => exit::VALIDATION,
            CliError::Model(proxrecall_core::Error::EnumerationLimit { .. }) => exit::LIMIT,
            CliError::Model(_) => exit::VALIDATION,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
