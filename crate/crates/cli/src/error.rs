use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] twistal::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: invalid JSON: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 0 success, 1 input error, 2 degenerate input, 3 resource cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(twistal::Error::Degenerate(_)) => 2,
            CliError::Core(twistal::Error::ResourceCap(_)) => 3,
            _ => 1,
        }
    }
}
