use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("property violation: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
