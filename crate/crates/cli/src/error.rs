use std::process::ExitCode;

/// Everything a command can fail with, mapped onto the documented exit
/// codes: 2 configuration, 3 numerics, 4 validation, 1 anything else.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("numerics: {0}")]
    Numerical(#[from] qpt_core::Error),
    #[error("validation: {0}")]
    Validation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl AppError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            AppError::Config(_) => ExitCode::from(2),
            AppError::Numerical(_) => ExitCode::from(3),
            AppError::Validation(_) => ExitCode::from(4),
            AppError::Io(_) => ExitCode::from(1),
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
