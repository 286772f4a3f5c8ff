use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { message: String, position: usize },

    #[error("paths do not compose: {0}")]
    Composition(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("window overflow: {0}")]
    WindowOverflow(String),

    #[error("presentation is not special biserial: {0}")]
    NotSpecialBiserial(String),

    /// An internal consistency failure of the linear-algebra oracle.
    #[error("no embedding found: {0}")]
    NoEmbedding(String),

    #[error("serialization error: {0}")]
    Serialization(String),
}

impl Error {
    pub fn parse(message: impl Into<String>, position: usize) -> Self {
        Error::Parse {
            message: message.into(),
            position,
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Serialization(_) => 2,
            Error::WindowOverflow(_) => 4,
            _ => 3,
        }
    }

    /// Short machine-readable kind tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Composition(_) => "composition",
            Error::InvalidQuiver(_) => "invalid_quiver",
            Error::InvalidWord(_) => "invalid_word",
            Error::Domain(_) => "domain",
            Error::WindowOverflow(_) => "window_overflow",
            Error::NotSpecialBiserial(_) => "not_special_biserial",
            Error::NoEmbedding(_) => "no_embedding",
            Error::Serialization(_) => "serialization",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
