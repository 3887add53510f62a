use std::process::ExitCode;

use cyclograph_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("no closed-form count applies: {0}")]
    NoFormula(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(CoreError),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::DegreeMismatch { .. }
            | CoreError::InvalidPermutation(_)
            | CoreError::InvalidField(_)
            | CoreError::InvalidFamily(_)
            | CoreError::NotPrime(_) => CliError::InvalidSpec(e.to_string()),
            CoreError::CapExceeded { .. } | CoreError::StorageExceeded { .. } | CoreError::Uncomputable(_) => {
                CliError::CapExceeded(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::InvalidSpec(_) | CliError::NoFormula(_) => ExitCode::from(2),
            CliError::CapExceeded(_) => ExitCode::from(3),
            CliError::Io(_) | CliError::Json(_) | CliError::Core(_) => ExitCode::from(1),
        }
    }
}
