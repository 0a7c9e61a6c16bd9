use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: String, cap: usize },
    #[error("element is not in the required centralizer: {0}")]
    NotInCentralizer(String),
    #[error("not realizable by this construction: {0}")]
    NotRealizable(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("operators do not commute: {0}")]
    NonCommuting(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
