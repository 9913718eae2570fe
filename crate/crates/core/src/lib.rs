//! Exact computations for associative 2-algebras (two-term A∞-algebras)
//! and crossed modules over associative algebras: axiom checkers with full
//! diagnostics, representations, the low-degree cochain complex and its
//! second cohomology, infinitesimal deformations and Nijenhuis operators,
//! and abelian extensions with their classification.
//!
//! All arithmetic is over ℚ. Checkers are generic over [`exactlin::Scalar`]
//! so the same code also runs on structures whose constants are polynomials
//! in a deformation parameter.

pub mod algebra2;
pub mod cli;
pub mod cohom2;
pub mod deform2;
pub mod error;
pub mod exactlin;
pub mod ext2;
pub mod fixtures;
pub mod io;
pub mod random;
pub mod rep2;
pub mod report;
pub mod tensor;
pub mod xmod;

pub use error::{Error, Result};
