//! Finite-dimensional Frobenius algebras in super vector spaces over the
//! rationals, with the structure needed for r-spin state sums: the Nakayama
//! automorphism, the window element and its inverse `ζ`, closed Λ_r-Frobenius
//! families and the checks relating them to an open algebra.

mod algebra;
mod closed;
mod conventions;
mod knowledgeable;
mod error;
pub mod format;
mod linear;
pub mod matrix;
pub mod presets;
mod report;

pub use algebra::FrobeniusAlgebra;
pub use error::AlgebraError;
pub use linear::{GradedSpace, LinearMap};
pub use matrix::{q, qf, Matrix, Q};
pub use closed::{ClosedFamily, Conventions, Power};
pub use report::{CheckEntry, Report};
pub use knowledgeable::check_knowledgeable;
