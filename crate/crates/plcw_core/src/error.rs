use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlcwError {
    #[error("invalid complex: {0}")]
    Structure(String),
    #[error("invalid marking: {0}")]
    Marking(String),
    #[error("marking is not admissible: {0}")]
    Inadmissible(String),
    #[error("illegal move: {0}")]
    Argument(String),
    #[error("cannot glue: {0}")]
    Glue(String),
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    Budget { needed: u128, budget: u128 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
