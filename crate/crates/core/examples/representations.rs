//! Adjoint and trivial representations, and the endomorphism 2-algebra of
//! a two-term complex.

use assoc2::algebra2::{build_end_algebra, check_algebra, TwoTermComplex};
use assoc2::exactlin::rat;
use assoc2::fixtures;
use assoc2::rep2::{adjoint_representation, check_representation, Representation2};
use assoc2::tensor::Tensor;

fn main() -> assoc2::Result<()> {
    for (name, g) in fixtures::algebras() {
        let adj = check_representation(&g, &adjoint_representation(&g))?;
        let triv = check_representation(&g, &Representation2::trivial(&g, TwoTermComplex::zero(1, 1)))?;
        println!("{name}: adjoint {}, trivial {}", adj.passed(), triv.passed());
    }

    let g = fixtures::fix_u();
    let mut r = adjoint_representation(&g);
    r.left0_v1.set(&[0, 0, 0], rat(2));
    println!("\nadjoint of FIX-U with e⊳f = 2f fails {:?}", check_representation(&g, &r)?.failed());

    let v = TwoTermComplex::new(Tensor::identity(2))?;
    let end = build_end_algebra(&v)?;
    println!(
        "\nEnd(ℚ² → ℚ²): dims {}/{}, passes {}",
        end.algebra.dim0(),
        end.algebra.dim1(),
        check_algebra(&end.algebra)?.passed()
    );
    Ok(())
}
