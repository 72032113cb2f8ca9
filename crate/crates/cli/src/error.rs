use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] zerosum::Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("output: {0}")]
    Output(String),
    #[error("{failed} of {total} checks failed")]
    VerifyFailed { failed: usize, total: usize },
}

impl CliError {
    /// Process exit status.
    ///
    /// | code | meaning |
    /// |------|---------|
    /// | 1 | invalid input or parameters |
    /// | 2 | no feasible weighting |
    /// | 3 | instance exceeds an oracle budget |
    /// | 4 | a verification check failed |
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(zerosum::Error::NoFeasibleWeighting(_)) => 2,
            CliError::Core(zerosum::Error::InstanceTooLarge { .. }) => 3,
            CliError::VerifyFailed { .. } => 4,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
