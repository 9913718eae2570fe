//! Associative algebras and bimodules, the Hochschild coboundary, and
//! associative 2-algebras with their homomorphisms and homotopy derivations.

mod assoc;
mod endalg;
mod hom;
mod two_term;

pub use assoc::{check_associative, check_bimodule, hochschild_coboundary, AssocAlgebra, Bimodule, HochschildCochain};
pub use endalg::{build_end_algebra, EndAlgebra};
pub use hom::{check_derivation, check_homomorphism, compose_homomorphisms, Homomorphism2, HomotopyDerivation};
pub use two_term::{check_algebra, direct_sum, pull_back, TwoTermAlgebra, TwoTermComplex};
