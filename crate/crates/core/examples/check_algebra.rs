//! Check the shipped 2-algebras, then break one and read the diagnostics.

use assoc2::algebra2::{check_algebra, check_homomorphism, Homomorphism2};
use assoc2::exactlin::{rat, Rational};
use assoc2::fixtures;
use assoc2::random;

fn main() -> assoc2::Result<()> {
    for (name, g) in fixtures::algebras() {
        let report = check_algebra(&g)?;
        println!("{name}: dims {}/{}, strict {}, passes {}", g.dim0(), g.dim1(), g.is_strict(), report.passed());
    }

    // l3(e,e,e) = f on the unit algebra violates the pentagon-type identity.
    let mut g = fixtures::fix_u();
    g.l3.set(&[0, 0, 0, 0], rat(1));
    let report = check_algebra(&g)?;
    println!("\nFIX-U with l3 = 1 fails {:?}", report.failed());
    for (id, v) in report.violations() {
        let show = |x: &[Rational]| x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
        println!("  {id} at {:?}: lhs [{}] rhs [{}]", v.tuple, show(&v.lhs), show(&v.rhs));
    }

    // Transport along a random isomorphism with F2 ≠ 0.
    let (h, [f0, f1, f2]) = random::isomorph(&mut random::rng(11), &fixtures::fix_r22())?;
    let iso = Homomorphism2 { f0, f1, f2 };
    println!("\nrandom isomorph of fix_r22 passes: {}", check_algebra(&h)?.passed());
    println!("and maps onto it homomorphically: {}", check_homomorphism(&h, &fixtures::fix_r22(), &iso)?.passed());
    Ok(())
}
