use crate::error::{expect_shape, shape_err, Result};
use crate::exactlin::{Rational, Scalar};
use crate::report::CheckReport;
use crate::tensor::Tensor;

use super::TwoTermAlgebra;

/// Homomorphism `(F0, F1, F2)` of associative 2-algebras. `F0: g0 → g0'`
/// and `F1: g1 → g1'` are linear maps, `F2: g0⊗g0 → g1'`.
#[derive(Clone, Debug, PartialEq)]
pub struct Homomorphism2<S = Rational> {
    pub f0: Tensor<S>,
    pub f1: Tensor<S>,
    pub f2: Tensor<S>,
}

impl<S: Scalar> Homomorphism2<S> {
    pub fn identity(dim0: usize, dim1: usize) -> Self {
        Homomorphism2 { f0: Tensor::identity(dim0), f1: Tensor::identity(dim1), f2: Tensor::zeros(&[dim0, dim0, dim1]) }
    }

    pub fn zero(src: (usize, usize), tgt: (usize, usize)) -> Self {
        Homomorphism2 {
            f0: Tensor::zeros(&[src.0, tgt.0]),
            f1: Tensor::zeros(&[src.1, tgt.1]),
            f2: Tensor::zeros(&[src.0, src.0, tgt.1]),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.f2.is_zero()
    }

    fn check_shapes(&self, src: &TwoTermAlgebra<S>, tgt: &TwoTermAlgebra<S>) -> Result<()> {
        let (n0, n1, m0, m1) = (src.dim0(), src.dim1(), tgt.dim0(), tgt.dim1());
        expect_shape("F0", self.f0.shape(), &[n0, m0])?;
        expect_shape("F1", self.f1.shape(), &[n1, m1])?;
        expect_shape("F2", self.f2.shape(), &[n0, n0, m1])
    }
}

/// Conditions of a homomorphism `src → tgt` on every basis tuple:
///
/// * `i`    F0(da) = d'F1(a)
/// * `ii`   F0(xy) − F0x·F0y = d'F2(x,y)
/// * `iii1` F1(xa) − F0x·F1a = F2(x,da)
/// * `iii2` F1(ax) − F1a·F0x = F2(da,x)
/// * `iv`   F1 l3(x,y,z) − l3'(F0x,F0y,F0z)
///   = F2(xy,z) − F2(x,yz) + F2(x,y)·F0z − F0x·F2(y,z)
///
/// The signs in `iv` are the ones compatible with `ii` and axiom `d`: with
/// the opposite choice, transporting a structure with `d ≠ 0` along an
/// isomorphism with `F2 ≠ 0` does not give a 2-algebra.
pub fn check_homomorphism<S: Scalar>(
    src: &TwoTermAlgebra<S>,
    tgt: &TwoTermAlgebra<S>,
    h: &Homomorphism2<S>,
) -> Result<CheckReport<S>> {
    src.check_shapes()?;
    tgt.check_shapes()?;
    h.check_shapes(src, tgt)?;
    let (n0, n1) = (src.dim0(), src.dim1());
    let (g, t) = (src, tgt);
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let f0 = |v: &[S]| h.f0.apply1(v);
    let f1 = |v: &[S]| h.f1.apply1(v);
    let f2 = |u: &[S], v: &[S]| h.f2.apply2(u, v);
    let mut r = CheckReport::new();
    r.family("i", "(a)", &[n1], |ix| {
        let a = a(ix[0]);
        (f0(&g.d(&a)), t.d(&f1(&a)))
    });
    r.family("ii", "(x,y)", &[n0, n0], |ix| {
        let (x, y) = (x(ix[0]), x(ix[1]));
        (f0(&g.m00(&x, &y)) - t.m00(&f0(&x), &f0(&y)), t.d(&f2(&x, &y)))
    });
    r.family("iii1", "(x,a)", &[n0, n1], |ix| {
        let (x, a) = (x(ix[0]), a(ix[1]));
        (f1(&g.m01(&x, &a)) - t.m01(&f0(&x), &f1(&a)), f2(&x, &g.d(&a)))
    });
    r.family("iii2", "(a,x)", &[n1, n0], |ix| {
        let (a, x) = (a(ix[0]), x(ix[1]));
        (f1(&g.m10(&a, &x)) - t.m10(&f1(&a), &f0(&x)), f2(&g.d(&a), &x))
    });
    r.family("iv", "(x,y,z)", &[n0, n0, n0], |ix| {
        let (x, y, z) = (x(ix[0]), x(ix[1]), x(ix[2]));
        let lhs = f1(&g.l3(&x, &y, &z)) - t.l3(&f0(&x), &f0(&y), &f0(&z));
        let rhs =
            f2(&g.m00(&x, &y), &z) - f2(&x, &g.m00(&y, &z)) + t.m10(&f2(&x, &y), &f0(&z)) - t.m01(&f0(&x), &f2(&y, &z));
        (lhs, rhs)
    });
    Ok(r)
}

/// `G∘F = (G0F0, G1F1, G2∘(F0×F0) + G1∘F2)`.
pub fn compose_homomorphisms<S: Scalar>(g: &Homomorphism2<S>, f: &Homomorphism2<S>) -> Result<Homomorphism2<S>> {
    if f.f0.out_dim() != g.f0.shape()[0] || f.f1.out_dim() != g.f1.shape()[0] {
        return Err(shape_err(format!(
            "cannot compose: first map lands in dims ({}, {}), second starts at ({}, {})",
            f.f0.out_dim(),
            f.f1.out_dim(),
            g.f0.shape()[0],
            g.f1.shape()[0]
        )));
    }
    let n0 = f.f0.shape()[0];
    let f2 = Tensor::from_fn(&[n0, n0], g.f1.out_dim(), |ix| {
        g.f2.apply2(&f.f0.at(&ix[..1]), &f.f0.at(&ix[1..])) + g.f1.apply1(&f.f2.at(ix))
    });
    Ok(Homomorphism2 { f0: f.f0.compose(&g.f0), f1: f.f1.compose(&g.f1), f2 })
}

/// Homotopy derivation `(D0, D1, D2)` of degree 0.
#[derive(Clone, Debug, PartialEq)]
pub struct HomotopyDerivation<S = Rational> {
    pub d0: Tensor<S>,
    pub d1: Tensor<S>,
    pub d2: Tensor<S>,
}

impl<S: Scalar> HomotopyDerivation<S> {
    pub fn zero(dim0: usize, dim1: usize) -> Self {
        HomotopyDerivation {
            d0: Tensor::zeros(&[dim0, dim0]),
            d1: Tensor::zeros(&[dim1, dim1]),
            d2: Tensor::zeros(&[dim0, dim0, dim1]),
        }
    }
}

/// Conditions of a homotopy derivation. The signs are those that make
/// `id + εD` a homomorphism modulo `ε²`, i.e. `D` is a derivation exactly
/// when `(D0, D1, D2)` is a 1-cocycle of the adjoint representation.
///
/// * `chain` D0(da) = d D1(a)
/// * `a`     D0x·y + x·D0y − D0(xy) = −d D2(x,y)
/// * `b`     D0x·m + x·D1m − D1(xm) = −D2(x,dm)
/// * `c`     D1m·x + m·D0x − D1(mx) = −D2(dm,x)
/// * `d`     Σ l3 with D0 in one slot − D1 l3(x,y,z)
///   = D2(x,yz) − D2(xy,z) + x·D2(y,z) − D2(x,y)·z
pub fn check_derivation<S: Scalar>(g: &TwoTermAlgebra<S>, der: &HomotopyDerivation<S>) -> Result<CheckReport<S>> {
    g.check_shapes()?;
    let (n0, n1) = (g.dim0(), g.dim1());
    expect_shape("D0", der.d0.shape(), &[n0, n0])?;
    expect_shape("D1", der.d1.shape(), &[n1, n1])?;
    expect_shape("D2", der.d2.shape(), &[n0, n0, n1])?;
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let d0 = |v: &[S]| der.d0.apply1(v);
    let d1 = |v: &[S]| der.d1.apply1(v);
    let d2 = |u: &[S], v: &[S]| der.d2.apply2(u, v);
    let mut r = CheckReport::new();
    r.family("chain", "(a)", &[n1], |ix| {
        let a = a(ix[0]);
        (d0(&g.d(&a)), g.d(&d1(&a)))
    });
    r.family("a", "(x,y)", &[n0, n0], |ix| {
        let (x, y) = (x(ix[0]), x(ix[1]));
        (g.m00(&d0(&x), &y) + g.m00(&x, &d0(&y)) - d0(&g.m00(&x, &y)), -g.d(&d2(&x, &y)))
    });
    r.family("b", "(x,m)", &[n0, n1], |ix| {
        let (x, m) = (x(ix[0]), a(ix[1]));
        (g.m01(&d0(&x), &m) + g.m01(&x, &d1(&m)) - d1(&g.m01(&x, &m)), -d2(&x, &g.d(&m)))
    });
    r.family("c", "(m,x)", &[n1, n0], |ix| {
        let (m, x) = (a(ix[0]), x(ix[1]));
        (g.m10(&d1(&m), &x) + g.m10(&m, &d0(&x)) - d1(&g.m10(&m, &x)), -d2(&g.d(&m), &x))
    });
    r.family("d", "(x,y,z)", &[n0, n0, n0], |ix| {
        let (x, y, z) = (x(ix[0]), x(ix[1]), x(ix[2]));
        let lhs = g.l3(&d0(&x), &y, &z) + g.l3(&x, &d0(&y), &z) + g.l3(&x, &y, &d0(&z)) - d1(&g.l3(&x, &y, &z));
        let rhs = d2(&x, &g.m00(&y, &z)) - d2(&g.m00(&x, &y), &z) + g.m01(&x, &d2(&y, &z)) - g.m10(&d2(&x, &y), &z);
        (lhs, rhs)
    });
    Ok(r)
}
