use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] dirac_shell::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for usage and parse errors, 3 for domain errors raised by the toolkit.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(dirac_shell::Error::Parse(_)) => 2,
            CliError::Core(_) => 3,
            CliError::Usage(_) | CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 2,
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
