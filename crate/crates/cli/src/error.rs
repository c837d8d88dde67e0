use thiserror::Error;

/// Everything that ends a run with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at {path}: {reason}")]
    Parse { path: String, reason: String },

    #[error("shape error at {path}: {reason}")]
    Shape { path: String, reason: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Engine(#[from] deformap::Error),
}

impl CliError {
    pub(crate) fn parse(path: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Parse {
            path: path.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn shape(path: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Shape {
            path: path.into(),
            reason: reason.into(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
