use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
    #[error("cone rays must be primitive, in the closed first quadrant and strictly counterclockwise")]
    DegenerateCone,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("generator {index} ({text}) is not a monomial; resolve the ideal externally and use graph import")]
    UnsupportedIdeal { index: usize, text: String },
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("unknown component id {0}")]
    UnknownId(usize),
    #[error("invalid graph at {path}: {message}")]
    Validation { path: String, message: String },
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("d must be a positive integer")]
    InvalidD,
    #[error("denominator has a factor without rational roots: {0}")]
    NonLinearDenominator(String),
    #[error("component E_{id} is not a chain end (k' = {k_prime})")]
    NotAnEnd { id: usize, k_prime: u64 },
    #[error("the chain starting at E_{0} ends without reaching a component with k' >= 3")]
    NoBranchPoint(usize),
    #[error("{name} must be at least {min}")]
    InvalidCount { name: &'static str, min: u64 },
    #[error("{0} is too large to materialise")]
    TooLarge(&'static str),
}

impl Error {
    pub(crate) fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            path: path.into(),
            message: message.into(),
        }
    }
}
