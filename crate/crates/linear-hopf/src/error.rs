use thiserror::Error;

use crate::matrix::Matrix;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("not a Hopf algebra: the SE shear has a kernel of dimension {}", kernel.len())]
    NoAntipode { kernel: Vec<Matrix> },
    #[error("integral condition not met: {0}")]
    Condition(String),
    #[error("evaluation: {0}")]
    Eval(String),
    #[error(transparent)]
    Core(#[from] polygraph_core::CoreError),
}

pub type Result<T> = std::result::Result<T, HopfError>;
