//! The classical Hochschild coboundary on small algebras.

use assoc2::algebra2::{hochschild_coboundary, HochschildCochain};
use assoc2::fixtures;
use assoc2::random;

fn main() -> assoc2::Result<()> {
    let mut rng = random::rng(1);
    for (name, a, m) in fixtures::hochschild_bimodules() {
        for arity in 1..=3 {
            let mut shape = vec![a.dim(); arity];
            shape.push(m.dim());
            let f = HochschildCochain { values: random::tensor(&mut rng, &shape, 0.6) };
            let df = hochschild_coboundary(&a, &m, &f)?;
            let ddf = hochschild_coboundary(&a, &m, &df)?;
            println!("{name}, arity {arity}: df nonzero {}, ddf zero {}", !df.values.is_zero(), ddf.values.is_zero());
        }
    }
    Ok(())
}
