use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// A computation or comparison came out wrong.
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<polytope_numbers::Error> for CliError {
    fn from(e: polytope_numbers::Error) -> Self {
        use polytope_numbers::Error;
        match e {
            Error::NonVanishingTail { .. } => CliError::Failed(e.to_string()),
            Error::InvalidOrder(_) | Error::OutOfRange(_) | Error::GridSyntax { .. } => CliError::Usage(e.to_string()),
        }
    }
}
