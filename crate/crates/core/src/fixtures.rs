//! Small hand-checkable structures used throughout tests and examples.

use crate::algebra2::{direct_sum, pull_back, AssocAlgebra, Bimodule, TwoTermAlgebra, TwoTermComplex};
use crate::exactlin::{rat, Rational};
use crate::tensor::Tensor;
use crate::xmod::CrossedModule;

fn one_one(d: i64, ee: i64, ef: i64, fe: i64, l3: i64) -> TwoTermAlgebra {
    TwoTermAlgebra {
        complex: TwoTermComplex { diff: Tensor::from_data(&[1, 1], vec![rat(d)]) },
        l2_00: Tensor::from_data(&[1, 1, 1], vec![rat(ee)]),
        l2_01: Tensor::from_data(&[1, 1, 1], vec![rat(ef)]),
        l2_10: Tensor::from_data(&[1, 1, 1], vec![rat(fe)]),
        l3: Tensor::from_data(&[1, 1, 1, 1], vec![rat(l3)]),
    }
}

/// Dims 1/1, every structure map zero.
pub fn fix_z() -> TwoTermAlgebra {
    one_one(0, 0, 0, 0, 0)
}

/// Dims 1/1 on `e ∈ g0`, `f ∈ g1`: `d = 0`, `e·e = e`, `e·f = f·e = f`.
pub fn fix_u() -> TwoTermAlgebra {
    one_one(0, 1, 1, 1, 0)
}

/// Dims 1/1: `d(f) = e`, all products zero.
pub fn fix_d() -> TwoTermAlgebra {
    one_one(1, 0, 0, 0, 0)
}

/// Dims 1/1: `d = 0`, products zero, `l3(e,e,e) = f`.
pub fn fix_l() -> TwoTermAlgebra {
    one_one(0, 0, 0, 0, 1)
}

fn ints(shape: &[usize], v: &[i64]) -> Tensor {
    Tensor::from_data(shape, v.iter().map(|&x| rat(x)).collect())
}

/// Dims 2/2: `FIX-U ⊕ FIX-D` transported along a fixed non-diagonal
/// isomorphism with `F2 ≠ 0`, so every structure map is dense and `l3 ≠ 0`.
pub fn fix_r22() -> TwoTermAlgebra {
    let target = direct_sum(&fix_u(), &fix_d()).expect("fixture shapes agree");
    let (f0, f1, f2) = r22_iso();
    pull_back(&target, &f0, &f1, &f2).expect("fixture isomorphism is invertible")
}

/// The isomorphism `(F0, F1, F2)` from [`fix_r22`] onto `FIX-U ⊕ FIX-D`.
pub fn r22_iso() -> (Tensor, Tensor, Tensor) {
    (ints(&[2, 2], &[1, 1, 0, 1]), ints(&[2, 2], &[1, 0, -1, 1]), ints(&[2, 2, 2], &[1, 0, 0, 2, 0, -1, 1, 1]))
}

/// Every shipped 2-algebra, by name.
pub fn algebras() -> Vec<(&'static str, TwoTermAlgebra)> {
    vec![("fix_z", fix_z()), ("fix_u", fix_u()), ("fix_d", fix_d()), ("fix_l", fix_l()), ("fix_r22", fix_r22())]
}

/// Algebras with bimodules for Hochschild tests: the idempotent line, the
/// dual numbers `ℚ[ε]/ε²` and upper-triangular 2×2 matrices, each regular.
pub fn hochschild_bimodules() -> Vec<(&'static str, AssocAlgebra, Bimodule)> {
    let idem = AssocAlgebra { mul: ints(&[1, 1, 1], &[1]) };
    // basis 1, ε
    let dual = AssocAlgebra { mul: ints(&[2, 2, 2], &[1, 0, 0, 1, 0, 1, 0, 0]) };
    // basis E11, E12, E22
    let mut ut = Tensor::<Rational>::zeros(&[3, 3, 3]);
    for (i, j, k) in [(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)] {
        ut.set(&[i, j, k], rat(1));
    }
    let ut = AssocAlgebra { mul: ut };
    [("idempotent", idem), ("dual_numbers", dual), ("upper_triangular", ut)]
        .into_iter()
        .map(|(n, a)| {
            let m = Bimodule::regular(&a);
            (n, a, m)
        })
        .collect()
}

/// `𝔭 = ℚ{e}` with `e·e = e`, `𝔥 = ℚ{f}` with `e·f = f·e = f`, `f = 0`.
pub fn fix_x() -> CrossedModule {
    one_one_xmod(0)
}

/// [`fix_x`] with `f(f) = e`.
pub fn fix_x_f() -> CrossedModule {
    one_one_xmod(1)
}

fn one_one_xmod(f: i64) -> CrossedModule {
    CrossedModule {
        p_alg: AssocAlgebra { mul: Tensor::from_data(&[1, 1, 1], vec![rat(1)]) },
        h_mod: Bimodule {
            left: Tensor::from_data(&[1, 1, 1], vec![rat(1)]),
            right: Tensor::from_data(&[1, 1, 1], vec![rat(1)]),
        },
        f_map: Tensor::from_data(&[1, 1], vec![rat(f)]),
    }
}

/// Every shipped crossed module, by name.
pub fn crossed_modules() -> Vec<(&'static str, CrossedModule)> {
    vec![("fix_x", fix_x()), ("fix_x_f", fix_x_f())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra2::{check_algebra, check_associative, check_bimodule};

    #[test]
    fn shipped_fixtures_pass() {
        for (name, g) in algebras() {
            assert!(check_algebra(&g).unwrap().passed(), "{name}");
        }
        for (name, a, m) in hochschild_bimodules() {
            assert!(check_associative(&a).unwrap().passed(), "{name}");
            assert!(check_bimodule(&a, &m).unwrap().passed(), "{name}");
        }
        let g = fix_r22();
        assert!(!g.l3.is_zero() && !g.is_strict());
    }
}
