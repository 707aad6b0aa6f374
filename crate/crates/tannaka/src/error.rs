use thiserror::Error;

#[derive(Debug, Error)]
pub enum TannakaError {
    #[error(transparent)]
    Hopf(#[from] linear_hopf::HopfError),
    #[error("not a comodule: {0}")]
    NotComodule(String),
    #[error("family is not tensor-closed within depth {depth}: {product} is not a quotient of family members")]
    Closure { depth: usize, product: String },
    #[error("{0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, TannakaError>;
