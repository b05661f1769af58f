use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StateSumError {
    #[error(transparent)]
    Plcw(#[from] plcw_core::PlcwError),
    #[error(transparent)]
    Algebra(#[from] frob_algebra::AlgebraError),
    #[error(transparent)]
    Center(#[from] graded_center::CenterError),
    #[error("the state sum is not defined on surfaces with punctures")]
    Puncture,
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("an intermediate tensor exceeded the budget of {0} entries")]
    Budget(usize),
}
