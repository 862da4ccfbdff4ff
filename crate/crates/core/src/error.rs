use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge or graph violates the basic structural invariants.
    #[error("malformed structure: {0}")]
    Structural(String),
    #[error("triple system is not linear: pair ({0}, {1}) lies in two edges")]
    NotLinear(usize, usize),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("instance too large: estimated {estimated} steps exceeds the limit of {limit}")]
    Capacity { estimated: u128, limit: u128 },
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A self-check that must hold by construction did not.
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
