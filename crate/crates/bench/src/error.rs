use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or values; exit status 2.
    #[error("usage: {0}")]
    Usage(String),

    /// The two miners disagreed; exit status 3.
    #[error("miners disagree {0}")]
    Mismatch(String),

    #[error(transparent)]
    Mining(#[from] apriori_core::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Mismatch(_) => ExitCode::from(3),
            CliError::Mining(apriori_core::Error::Spec(_))
            | CliError::Mining(apriori_core::Error::InvalidThreshold(_)) => ExitCode::from(2),
            _ => ExitCode::from(1),
        }
    }
}
