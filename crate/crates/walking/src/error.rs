use polygraph_core::CoreError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WalkError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("dimension overflow: {0}")]
    Overflow(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("basepoint `{0}` is not an object")]
    Basepoint(String),
}

pub type Result<T> = std::result::Result<T, WalkError>;
