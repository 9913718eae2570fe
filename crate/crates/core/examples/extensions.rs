//! Abelian extensions: build from a cocycle, extract along another
//! splitting, and decide equivalence.

use assoc2::cohom2::{d1_apply, second_cohomology, Cochain2, CochainDims};
use assoc2::ext2::{build_extension, check_equivalence, extract_cocycle, Equivalence};
use assoc2::fixtures;
use assoc2::random;
use assoc2::rep2::adjoint_representation;

fn main() -> assoc2::Result<()> {
    let g = fixtures::fix_u();
    let r = adjoint_representation(&g);
    let h = second_cohomology(&g, &r)?;
    let mut rng = random::rng(2);
    let c = random::cocycle(&mut rng, &h);
    let e = build_extension(&g, &r, &c)?;
    println!("extension of FIX-U: total dims {}/{}", e.total.dim0(), e.total.dim1());
    println!("cocycle recovered exactly: {}", extract_cocycle(&e)? == c);

    let shifted = c.add(&d1_apply(&g, &r, &random::cochain1(&mut rng, CochainDims::of(&g, &r)))?);
    let e2 = build_extension(&g, &r, &shifted)?;
    match check_equivalence(&e, &e2)? {
        Equivalence::Equivalent { witness, .. } => println!(
            "cohomologous pair: equivalent, witness λ0 = {:?}",
            witness.phi.data().iter().map(|q| q.to_string()).collect::<Vec<_>>()
        ),
        Equivalence::Inequivalent { .. } => println!("unexpected: inequivalent"),
    }

    let z = fixtures::fix_z();
    let rz = adjoint_representation(&z);
    let hz = second_cohomology(&z, &rz)?;
    let e0 = build_extension(&z, &rz, &Cochain2::zero(hz.dims))?;
    let e1 = build_extension(&z, &rz, &hz.representatives[0])?;
    if let Equivalence::Inequivalent { rank_d1, rank_with_difference } = check_equivalence(&e0, &e1)? {
        println!("FIX-Z trivial vs nontrivial class: inequivalent, rank {rank_d1} → {rank_with_difference}");
    }
    Ok(())
}
