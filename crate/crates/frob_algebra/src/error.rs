use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degenerate structure: {0}")]
    Degenerate(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
