//! Second cohomology of the shipped fixtures and reduction of a cocycle to
//! its class representative.

use assoc2::algebra2::TwoTermComplex;
use assoc2::cohom2::{d1_apply, reduce_cocycle, second_cohomology, CochainDims};
use assoc2::fixtures;
use assoc2::random;
use assoc2::rep2::{adjoint_representation, Representation2};

fn main() -> assoc2::Result<()> {
    let z = fixtures::fix_z();
    let h = second_cohomology(&z, &Representation2::trivial(&z, TwoTermComplex::zero(1, 1)))?;
    println!("FIX-Z, trivial 1/1: Z² {}, B² {}, H² {}", h.dim_z2(), h.dim_b2(), h.dim_h2());

    for (name, g) in fixtures::algebras() {
        let h = second_cohomology(&g, &adjoint_representation(&g))?;
        println!("{name}, adjoint: Z² {}, B² {}, H² {}", h.dim_z2(), h.dim_b2(), h.dim_h2());
    }

    // A class representative plus a random coboundary reduces back to it.
    let g = fixtures::fix_r22();
    let r = adjoint_representation(&g);
    let h = second_cohomology(&g, &r)?;
    let mut rng = random::rng(5);
    let c = h.representatives[0].add(&d1_apply(&g, &r, &random::cochain1(&mut rng, CochainDims::of(&g, &r)))?);
    let red = reduce_cocycle(&g, &r, &c)?;
    println!("\nfix_r22: coordinates in H² {:?}", red.coords.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    Ok(())
}
