use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("cannot compose: target {target} of the first map differs from source {expected} of the second")]
    Mismatch { target: String, expected: String },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("invalid lift: {0}")]
    InvalidLift(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
