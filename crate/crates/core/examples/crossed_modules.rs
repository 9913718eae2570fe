//! Crossed modules over associative algebras: the correspondence with
//! strict 2-algebras, semidirect products and cohomology.

use assoc2::fixtures;
use assoc2::xmod::{check_crossed_module, from_strict, semidirect_product, to_strict, xmod_adjoint, xmod_h2};

fn main() -> assoc2::Result<()> {
    for (name, x) in fixtures::crossed_modules() {
        let g = to_strict(&x)?;
        let back = from_strict(&g)?;
        let h = xmod_h2(&x, &xmod_adjoint(&x))?;
        let s = semidirect_product(&x, &xmod_adjoint(&x))?;
        println!(
            "{name}: axioms {}, round trip {}, adjoint H² {}, semidirect dims {}/{} passes {}",
            check_crossed_module(&x)?.passed(),
            back == x,
            h.dim_h2(),
            s.dim_p(),
            s.dim_h(),
            check_crossed_module(&s)?.passed()
        );
    }
    Ok(())
}
