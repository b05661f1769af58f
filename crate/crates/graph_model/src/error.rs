use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{0}")]
    Argument(String),
    #[error("graphs differ: {0}")]
    Mismatch(String),
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error(transparent)]
    Plcw(#[from] plcw_core::PlcwError),
    #[error(transparent)]
    Cyclic(#[from] cyclic_cat::CyclicError),
}
