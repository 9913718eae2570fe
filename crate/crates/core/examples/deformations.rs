//! Infinitesimal deformations over ℚ[λ] and Nijenhuis operators.

use assoc2::cohom2::Cochain2;
use assoc2::deform2::{
    adjoint_dims, check_generates, check_nijenhuis, check_trivializing, nijenhuis_deformation, NijenhuisCandidate,
    PolyStructure,
};
use assoc2::exactlin::rat;
use assoc2::fixtures;

fn main() -> assoc2::Result<()> {
    let g = fixtures::fix_u();

    // ψ = id: d becomes λ·id. A cocycle, and a structure on its own.
    let mut c = Cochain2::zero(adjoint_dims(&g));
    c.psi.set(&[0, 0], rat(1));
    let v = check_generates(&PolyStructure::new(g.clone(), c, None)?)?;
    println!("ψ = id on FIX-U: cocycle {}, standalone {}", v.cocycle_ok, v.standalone_ok);

    // ω = 1 alone breaks the first-order axioms.
    let mut c = Cochain2::zero(adjoint_dims(&g));
    c.omega.set(&[0, 0, 0], rat(1));
    let v = check_generates(&PolyStructure::new(g.clone(), c, None)?)?;
    println!("ω = 1 on FIX-U: cocycle {}; failing at λ¹:", v.cocycle_ok);
    for f in v.failures.iter().filter(|f| f.degree == 1) {
        println!("  {} {:?}", f.condition, f.tuple);
    }

    let n = NijenhuisCandidate::scalar(1, 1, &rat(1));
    println!("\n(id, id) is Nijenhuis on FIX-U: {}", check_nijenhuis(&g, &n)?.passed());
    let p = nijenhuis_deformation(&g, &n)?;
    println!("id + λN trivializes it: {}", check_trivializing(&p, &n)?.passed());

    let d = fixtures::fix_d();
    let bad = NijenhuisCandidate { n1: n.n1.scale(&rat(2)), ..n.clone() };
    println!("(id, 2id) on FIX-D fails {:?}", check_nijenhuis(&d, &bad)?.failed());
    Ok(())
}
