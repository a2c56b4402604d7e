//! Exact linear algebra over the rationals.
//!
//! All structural verdicts in the crate (ranks, kernels, algebra dimensions,
//! determinants) are computed here, without floating point.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use matrix::{Matrix, Rref};
pub use poly::{MultiPoly, Poly};
pub use scalar::Scalar;
