use thiserror::Error;

use crate::report::{EXIT_FAIL, EXIT_USAGE};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    /// input read fine but describes something invalid
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Invalid(_) => EXIT_FAIL,
        }
    }
}

impl From<linear_hopf::HopfError> for CliError {
    fn from(e: linear_hopf::HopfError) -> Self {
        match e {
            linear_hopf::HopfError::Parse(s) => CliError::Usage(format!("parse error: {s}")),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<polygraph_core::CoreError> for CliError {
    fn from(e: polygraph_core::CoreError) -> Self {
        match e {
            polygraph_core::CoreError::Parse(s) => CliError::Usage(format!("parse error: {s}")),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<walking::WalkError> for CliError {
    fn from(e: walking::WalkError) -> Self {
        match e {
            walking::WalkError::Core(c) => c.into(),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<tannaka::TannakaError> for CliError {
    fn from(e: tannaka::TannakaError) -> Self {
        match e {
            tannaka::TannakaError::Hopf(h) => h.into(),
            tannaka::TannakaError::Parse(s) => CliError::Usage(format!("parse error: {s}")),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
