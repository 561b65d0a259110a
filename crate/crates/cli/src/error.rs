use thiserror::Error;

/// Failures surfaced to the shell. Input problems exit with status 2,
/// computational and I/O failures with status 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] poisson::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use poisson::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::Domain(_)
                | E::Parameter(_)
                | E::InvalidOptions(_)
                | E::Overflow(_)
                | E::ParityMismatch { .. }
                | E::UnknownIdentity(_)
                | E::UnknownVariant { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
