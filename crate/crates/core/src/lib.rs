//! Exact symbolic computation for Clifford analysis on quantum Euclidean
//! space.
//!
//! Everything is computed over the field `Q(i)(s)` where `s` is a formal
//! square root of the deformation parameter `q`. Variables satisfy
//! `x_i x_j = q x_j x_i` for `i < j`, and Clifford generators satisfy
//! `e_i^2 = -1`, `e_i e_j = -q e_j e_i` (or `-q^-1` for the `e+` family).

pub mod error;
pub mod expr;
pub mod fischer;
pub mod linalg;
pub mod ops;
pub mod qclifford;
pub mod qpoly;
pub mod scalars;
pub mod verifier;
mod text;

pub use error::{Error, Result};
pub use scalars::{qbrace, qfactorial, qnum, qnum_half, GaussRat, LaurentPoly, ScalarQ};
