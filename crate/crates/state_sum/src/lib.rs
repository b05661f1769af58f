//! State sums for open-closed r-spin surfaces: a marked PLCW decomposition
//! and a Λ_r-Frobenius algebra with invertible window element give a linear
//! map between the state spaces of the boundary.

mod error;
pub mod evaluate;
pub mod generators;
pub mod network;
pub mod relations;
pub mod word;

pub use error::StateSumError;
pub use evaluate::{evaluate, evaluate_closed, evaluate_with, state_spaces, StateSumData, DENSE_FACE_MAX};
pub use relations::{verify_generator_relations, verify_with};
pub use word::Word;
