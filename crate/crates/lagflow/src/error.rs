use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] lagflow_core::Error),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Exit status for this error: always 2, the usage-error code.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
