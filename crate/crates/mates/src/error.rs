use polygraph_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MateError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid record: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, MateError>;
