use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("wrong coefficient ring: {0}")]
    WrongRing(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
