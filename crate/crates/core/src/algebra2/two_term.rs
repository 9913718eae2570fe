use crate::error::{expect_shape, Error, Result};
use crate::exactlin::{Rational, RationalMatrix, Scalar};
use crate::report::CheckReport;
use crate::tensor::{Tensor, Vector};

/// Two-term complex `C1 → C0`. `diff` is stored as a linear map
/// `[dim1, dim0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermComplex<S = Rational> {
    pub diff: Tensor<S>,
}

impl<S: Scalar> TwoTermComplex<S> {
    pub fn new(diff: Tensor<S>) -> Result<Self> {
        if diff.shape().len() != 2 {
            return Err(crate::error::shape_err(format!(
                "differential has shape {:?}, expected a linear map",
                diff.shape()
            )));
        }
        Ok(TwoTermComplex { diff })
    }

    pub fn zero(dim0: usize, dim1: usize) -> Self {
        TwoTermComplex { diff: Tensor::zeros(&[dim1, dim0]) }
    }

    pub fn dim0(&self) -> usize {
        self.diff.shape()[1]
    }

    pub fn dim1(&self) -> usize {
        self.diff.shape()[0]
    }

    pub fn apply(&self, m: &[S]) -> Vector<S> {
        self.diff.apply1(m)
    }
}

impl TwoTermComplex<Rational> {
    /// The differential as a `dim0 × dim1` matrix.
    pub fn diff_matrix(&self) -> RationalMatrix {
        self.diff.to_matrix()
    }

    pub fn from_matrix(m: &RationalMatrix) -> Self {
        TwoTermComplex { diff: Tensor::from_matrix(m) }
    }
}

/// Associative 2-algebra on `g1 →d g0`: products `g0⊗g0→g0`, `g0⊗g1→g1`,
/// `g1⊗g0→g1` and the homotopy `l3: g0⊗g0⊗g0→g1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermAlgebra<S = Rational> {
    pub complex: TwoTermComplex<S>,
    pub l2_00: Tensor<S>,
    pub l2_01: Tensor<S>,
    pub l2_10: Tensor<S>,
    pub l3: Tensor<S>,
}

impl<S: Scalar> TwoTermAlgebra<S> {
    pub fn new(
        complex: TwoTermComplex<S>,
        l2_00: Tensor<S>,
        l2_01: Tensor<S>,
        l2_10: Tensor<S>,
        l3: Tensor<S>,
    ) -> Result<Self> {
        let g = TwoTermAlgebra { complex, l2_00, l2_01, l2_10, l3 };
        g.check_shapes()?;
        Ok(g)
    }

    pub fn zero(dim0: usize, dim1: usize) -> Self {
        TwoTermAlgebra {
            complex: TwoTermComplex::zero(dim0, dim1),
            l2_00: Tensor::zeros(&[dim0, dim0, dim0]),
            l2_01: Tensor::zeros(&[dim0, dim1, dim1]),
            l2_10: Tensor::zeros(&[dim1, dim0, dim1]),
            l3: Tensor::zeros(&[dim0, dim0, dim0, dim1]),
        }
    }

    pub fn check_shapes(&self) -> Result<()> {
        let (n0, n1) = (self.dim0(), self.dim1());
        expect_shape("d", self.complex.diff.shape(), &[n1, n0])?;
        expect_shape("l2_00", self.l2_00.shape(), &[n0, n0, n0])?;
        expect_shape("l2_01", self.l2_01.shape(), &[n0, n1, n1])?;
        expect_shape("l2_10", self.l2_10.shape(), &[n1, n0, n1])?;
        expect_shape("l3", self.l3.shape(), &[n0, n0, n0, n1])
    }

    pub fn dim0(&self) -> usize {
        self.complex.dim0()
    }

    pub fn dim1(&self) -> usize {
        self.complex.dim1()
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    pub fn d(&self, a: &[S]) -> Vector<S> {
        self.complex.apply(a)
    }

    /// `x·y` for `x, y ∈ g0`.
    pub fn m00(&self, x: &[S], y: &[S]) -> Vector<S> {
        self.l2_00.apply2(x, y)
    }

    /// `x·a` for `x ∈ g0, a ∈ g1`.
    pub fn m01(&self, x: &[S], a: &[S]) -> Vector<S> {
        self.l2_01.apply2(x, a)
    }

    /// `a·x` for `a ∈ g1, x ∈ g0`.
    pub fn m10(&self, a: &[S], x: &[S]) -> Vector<S> {
        self.l2_10.apply2(a, x)
    }

    pub fn l3(&self, x: &[S], y: &[S], z: &[S]) -> Vector<S> {
        self.l3.apply3(x, y, z)
    }

    pub fn e0(&self, i: usize) -> Vector<S> {
        Vector::unit(self.dim0(), i)
    }

    pub fn e1(&self, i: usize) -> Vector<S> {
        Vector::unit(self.dim1(), i)
    }
}

impl TwoTermAlgebra<Rational> {
    /// The same structure with constants viewed in a larger scalar ring.
    pub fn lift<T: Scalar>(&self) -> TwoTermAlgebra<T> {
        TwoTermAlgebra {
            complex: TwoTermComplex { diff: self.complex.diff.lift() },
            l2_00: self.l2_00.lift(),
            l2_01: self.l2_01.lift(),
            l2_10: self.l2_10.lift(),
            l3: self.l3.lift(),
        }
    }
}

/// Conditions (a)–(f) on every basis tuple:
///
/// * `a`  d(x·a) = x·da
/// * `b`  d(a·x) = da·x
/// * `c`  da·b = a·db
/// * `d`  d l3(x,y,z) = (xy)z − x(yz)
/// * `e1` l3(x,y,da) = (xy)a − x(ya)
/// * `e2` l3(x,da,y) = (xa)y − x(ay)
/// * `e3` l3(da,x,y) = (ax)y − a(xy)
/// * `f`  x·l3(y,z,t) + l3(x,y,z)·t = l3(xy,z,t) − l3(x,yz,t) + l3(x,y,zt)
pub fn check_algebra<S: Scalar>(g: &TwoTermAlgebra<S>) -> Result<CheckReport<S>> {
    g.check_shapes()?;
    let (n0, n1) = (g.dim0(), g.dim1());
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let mut r = CheckReport::new();
    r.family("a", "(x,a)", &[n0, n1], |t| {
        let (x, a) = (x(t[0]), a(t[1]));
        (g.d(&g.m01(&x, &a)), g.m00(&x, &g.d(&a)))
    });
    r.family("b", "(a,x)", &[n1, n0], |t| {
        let (a, x) = (a(t[0]), x(t[1]));
        (g.d(&g.m10(&a, &x)), g.m00(&g.d(&a), &x))
    });
    r.family("c", "(a,b)", &[n1, n1], |t| {
        let (a, b) = (a(t[0]), a(t[1]));
        (g.m01(&g.d(&a), &b), g.m10(&a, &g.d(&b)))
    });
    r.family("d", "(x,y,z)", &[n0, n0, n0], |t| {
        let (x, y, z) = (x(t[0]), x(t[1]), x(t[2]));
        (g.d(&g.l3(&x, &y, &z)), g.m00(&g.m00(&x, &y), &z) - g.m00(&x, &g.m00(&y, &z)))
    });
    r.family("e1", "(x,y,a)", &[n0, n0, n1], |t| {
        let (x, y, a) = (x(t[0]), x(t[1]), a(t[2]));
        (g.l3(&x, &y, &g.d(&a)), g.m01(&g.m00(&x, &y), &a) - g.m01(&x, &g.m01(&y, &a)))
    });
    r.family("e2", "(x,a,y)", &[n0, n1, n0], |t| {
        let (x, a, y) = (x(t[0]), a(t[1]), x(t[2]));
        (g.l3(&x, &g.d(&a), &y), g.m10(&g.m01(&x, &a), &y) - g.m01(&x, &g.m10(&a, &y)))
    });
    r.family("e3", "(a,x,y)", &[n1, n0, n0], |t| {
        let (a, x, y) = (a(t[0]), x(t[1]), x(t[2]));
        (g.l3(&g.d(&a), &x, &y), g.m10(&g.m10(&a, &x), &y) - g.m10(&a, &g.m00(&x, &y)))
    });
    r.family("f", "(x,y,z,t)", &[n0, n0, n0, n0], |t| {
        let (x, y, z, w) = (x(t[0]), x(t[1]), x(t[2]), x(t[3]));
        let lhs = g.m01(&x, &g.l3(&y, &z, &w)) + g.m10(&g.l3(&x, &y, &z), &w);
        let rhs = g.l3(&g.m00(&x, &y), &z, &w) - g.l3(&x, &g.m00(&y, &z), &w) + g.l3(&x, &y, &g.m00(&z, &w));
        (lhs, rhs)
    });
    Ok(r)
}

/// Transport `target`'s structure back along linear isomorphisms
/// `f0: g0 → g0'`, `f1: g1 → g1'` and an arbitrary `f2: g0⊗g0 → g1'`.
/// The result is the unique structure on `(g0, g1)` for which
/// `(f0, f1, f2)` is a homomorphism into `target`.
pub fn pull_back(
    target: &TwoTermAlgebra<Rational>,
    f0: &Tensor<Rational>,
    f1: &Tensor<Rational>,
    f2: &Tensor<Rational>,
) -> Result<TwoTermAlgebra<Rational>> {
    target.check_shapes()?;
    let (n0, n1) = (target.dim0(), target.dim1());
    expect_shape("F0", f0.shape(), &[n0, n0])?;
    expect_shape("F1", f1.shape(), &[n1, n1])?;
    expect_shape("F2", f2.shape(), &[n0, n0, n1])?;
    let inv0 = f0.to_matrix().inverse().ok_or_else(|| Error::Singular("F0".into()))?;
    let inv1 = f1.to_matrix().inverse().ok_or_else(|| Error::Singular("F1".into()))?;
    let inv0 = Tensor::from_matrix(&inv0);
    let inv1 = Tensor::from_matrix(&inv1);
    let t = target;
    let e0 = |i| Vector::<Rational>::unit(n0, i);
    let e1 = |i| Vector::<Rational>::unit(n1, i);

    let diff = Tensor::from_fn(&[n1], n0, |ix| inv0.apply1(&t.d(&f1.at(ix))));
    let complex = TwoTermComplex { diff };
    let l2_00 = Tensor::from_fn(&[n0, n0], n0, |ix| {
        let v = t.m00(&f0.at(&ix[..1]), &f0.at(&ix[1..])) + t.d(&f2.at(ix));
        inv0.apply1(&v)
    });
    let l2_01 = Tensor::from_fn(&[n0, n1], n1, |ix| {
        let (x, a) = (e0(ix[0]), e1(ix[1]));
        let v = t.m01(&f0.apply1(&x), &f1.apply1(&a)) + f2.apply2(&x, &complex.apply(&a));
        inv1.apply1(&v)
    });
    let l2_10 = Tensor::from_fn(&[n1, n0], n1, |ix| {
        let (a, x) = (e1(ix[0]), e0(ix[1]));
        let v = t.m10(&f1.apply1(&a), &f0.apply1(&x)) + f2.apply2(&complex.apply(&a), &x);
        inv1.apply1(&v)
    });
    let m = |x: &[Rational], y: &[Rational]| l2_00.apply2(x, y);
    let l3 = Tensor::from_fn(&[n0, n0, n0], n1, |ix| {
        let (x, y, z) = (e0(ix[0]), e0(ix[1]), e0(ix[2]));
        let (fx, fy, fz) = (f0.apply1(&x), f0.apply1(&y), f0.apply1(&z));
        let v = t.l3(&fx, &fy, &fz) - f2.apply2(&x, &m(&y, &z)) + f2.apply2(&m(&x, &y), &z)
            - t.m01(&fx, &f2.apply2(&y, &z))
            + t.m10(&f2.apply2(&x, &y), &fz);
        inv1.apply1(&v)
    });
    TwoTermAlgebra::new(complex, l2_00, l2_01, l2_10, l3)
}

/// Place `a` and `b` block-diagonally: every slot of the result is the direct
/// sum of the corresponding slots, and mixed index tuples map to zero.
fn block_sum<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>) -> Tensor<S> {
    let shape: Vec<usize> = a.shape().iter().zip(b.shape()).map(|(x, y)| x + y).collect();
    let mut t = Tensor::zeros(&shape);
    for (ix, v) in a.nonzero_entries() {
        t.set(&ix, v);
    }
    for (ix, v) in b.nonzero_entries() {
        let shifted: Vec<usize> = ix.iter().zip(a.shape()).map(|(i, o)| i + o).collect();
        t.set(&shifted, v);
    }
    t
}

/// `g ⊕ h`, with `g`'s basis first in each degree.
pub fn direct_sum<S: Scalar>(g: &TwoTermAlgebra<S>, h: &TwoTermAlgebra<S>) -> Result<TwoTermAlgebra<S>> {
    g.check_shapes()?;
    h.check_shapes()?;
    Ok(TwoTermAlgebra {
        complex: TwoTermComplex { diff: block_sum(&g.complex.diff, &h.complex.diff) },
        l2_00: block_sum(&g.l2_00, &h.l2_00),
        l2_01: block_sum(&g.l2_01, &h.l2_01),
        l2_10: block_sum(&g.l2_10, &h.l2_10),
        l3: block_sum(&g.l3, &h.l3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn named_fixtures_pass() {
        for g in [fixtures::fix_z(), fixtures::fix_u(), fixtures::fix_d(), fixtures::fix_l()] {
            let r = check_algebra(&g).unwrap();
            assert!(r.passed(), "{:?}", r.failed());
        }
    }

    #[test]
    fn adding_l3_to_fix_u_breaks_f() {
        let mut g = fixtures::fix_u();
        g.l3.set(&[0, 0, 0, 0], crate::exactlin::rat(1));
        let r = check_algebra(&g).unwrap();
        let v = &r.condition("f").unwrap().violations[0];
        assert_eq!(v.lhs, Vector(vec![crate::exactlin::rat(2)]));
        assert_eq!(v.rhs, Vector(vec![crate::exactlin::rat(1)]));
    }

    #[test]
    fn direct_sums_of_fixtures_pass() {
        let g = direct_sum(&fixtures::fix_u(), &fixtures::fix_l()).unwrap();
        assert_eq!((g.dim0(), g.dim1()), (2, 2));
        assert!(check_algebra(&g).unwrap().passed());
    }

    #[test]
    fn diff_matrix_shape() {
        let g = fixtures::fix_d();
        let m = g.complex.diff_matrix();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert_eq!(g.d(&g.e1(0)), g.e0(0));
    }
}
