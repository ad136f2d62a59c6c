use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("singular matrix")]
    Singular,
    #[error("unknown name `{0}`")]
    Unknown(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("inadmissible weight: {0}")]
    Inadmissible(String),
    #[error("unsupported module: {0}")]
    Unsupported(String),
    #[error("invalid parameters: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
