use crate::term::CellTerm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("composition along dimension {k} rejected: target {left} vs source {right}")]
    Composition {
        k: usize,
        left: CellTerm,
        right: CellTerm,
    },
    #[error("inverse requested for non-invertible content `{0}`")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid term: {0}")]
    Invalid(String),
    #[error("no occurrence of `{0}` in the current diagram")]
    NoMatch(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
