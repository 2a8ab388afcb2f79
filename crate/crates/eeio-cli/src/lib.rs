//! Library side of the `eeio` command line: configuration, the per-year
//! pipeline, ranking/trend assembly, and report rendering.

pub mod config;
pub mod pipeline;
pub mod ranking;
pub mod render;
pub mod trend;

use thiserror::Error;

/// CLI-level failure, split by exit code: configuration and IO problems
/// exit 2, data that loads but fails validation exits 1.
#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Validation(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Config(_) => 2,
            AppError::Validation(_) => 1,
        }
    }
}

impl From<eeio::Error> for AppError {
    fn from(e: eeio::Error) -> Self {
        match e.class() {
            eeio::ErrorClass::InputFormat => AppError::Config(e.to_string()),
            eeio::ErrorClass::DataInvalid => AppError::Validation(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
