use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A single violated condition, tagged with the condition name used
/// throughout the crate (`P1`, `P2`, `R1`..`R3`, `Q1`..`Q3`, `G1`, `G2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    pub detail: String,
}

impl Violation {
    pub fn new(condition: &'static str, detail: impl Into<String>) -> Self {
        Self { condition, detail: detail.into() }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)
    }
}

fn join(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{}", join(.0))]
    Violations(Vec<Violation>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} needs {needed} elements, cap is {cap}")]
    Resource { what: String, needed: u128, cap: usize },

    #[error("inconsistent results: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }

    pub fn violation(condition: &'static str, detail: impl Into<String>) -> Self {
        Error::Violations(vec![Violation::new(condition, detail)])
    }

    /// Names of the violated conditions, if this is a validation failure.
    pub fn conditions(&self) -> Vec<&'static str> {
        match self {
            Error::Violations(v) => v.iter().map(|v| v.condition).collect(),
            _ => Vec::new(),
        }
    }
}
