//! The r-cyclic category Λ_r.
//!
//! A morphism `[n]_r -> [m]_r` is stored as the values `F(0..=n)` of a monotone
//! map `F: Z -> Z` with `F(i + n + 1) = F(i) + m + 1`. Two lifts that differ by a
//! constant multiple of `r(m+1)` describe the same arrow, so every lift is kept
//! in the window `0 <= F(0) < r(m+1)`.
//!
//! With this encoding `τ_n` is the lift `i ↦ i - 1`. That is the orientation in
//! which `τ_n ∘ δ_0 = δ_n` and `τ_1 ∘ φ^n = φ^0 ∘ τ^n` hold; the opposite shift
//! `i ↦ i + 1` is `τ_n^{-1}`.

mod error;
mod morphism;
mod notation;
mod special;

pub use error::CyclicError;
pub use morphism::{CyclicMorphism, CyclicObject};
pub use notation::parse_morphism;
