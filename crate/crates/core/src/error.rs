use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generalized binomial order must be at least 1 (got {0})")]
    InvalidOrder(u32),

    #[error("coefficient {index} of the {what} expansion is {value}, expected 0 beyond index {limit}")]
    NonVanishingTail { what: &'static str, index: usize, limit: usize, value: String },

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("grid config line {line}: {msg}")]
    GridSyntax { line: usize, msg: String },
}
