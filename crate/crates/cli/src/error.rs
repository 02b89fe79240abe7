use thiserror::Error;

/// Failures that stop a command before it can produce a report. All map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("{0}: invalid JSON: {1}")]
    Json(String, #[source] serde_json::Error),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] leibniz_core::Error),
}
