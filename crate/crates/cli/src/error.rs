use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] strongclique::Error),
    /// Unreadable or malformed input, tagged with where it came from.
    #[error("{source_name}: {error}")]
    Input {
        source_name: String,
        error: strongclique::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Job { path: String, message: String },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;
