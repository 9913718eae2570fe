//! Representations of associative 2-algebras on two-term complexes.
//!
//! A representation of `g` on `V1 →∂ V0` consists of the actions
//!
//! | tensor      | shape              | meaning      |
//! |-------------|--------------------|--------------|
//! | `left0_v0`  | `[g0, V0, V0]`     | `x⊳u`        |
//! | `left0_v1`  | `[g0, V1, V1]`     | `x⊳m`        |
//! | `right0_v0` | `[V0, g0, V0]`     | `u⊲x`        |
//! | `right0_v1` | `[V1, g0, V1]`     | `m⊲x`        |
//! | `left1`     | `[g1, V0, V1]`     | `a⊳u`        |
//! | `right1`    | `[V0, g1, V1]`     | `u⊲a`        |
//! | `tri_l`     | `[g0, g0, V0, V1]` | `(x,y)⊳u`    |
//! | `tri_m`     | `[g0, V0, g0, V1]` | `x⊳u⊲y`      |
//! | `tri_r`     | `[V0, g0, g0, V1]` | `u⊲(x,y)`    |
//!
//! with `x, y ∈ g0`, `a ∈ g1`, `u ∈ V0`, `m ∈ V1`. These are exactly the
//! data making `g ⊕ V` (with `V` squaring to zero) an associative 2-algebra,
//! which is how the axioms below are organised.

use crate::algebra2::{TwoTermAlgebra, TwoTermComplex};
use crate::error::{expect_shape, Result};
use crate::exactlin::{Rational, Scalar};
use crate::report::CheckReport;
use crate::tensor::{Tensor, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct Representation2<S = Rational> {
    pub complex: TwoTermComplex<S>,
    pub left0_v0: Tensor<S>,
    pub left0_v1: Tensor<S>,
    pub right0_v0: Tensor<S>,
    pub right0_v1: Tensor<S>,
    pub left1: Tensor<S>,
    pub right1: Tensor<S>,
    pub tri_l: Tensor<S>,
    pub tri_m: Tensor<S>,
    pub tri_r: Tensor<S>,
}

impl<S: Scalar> Representation2<S> {
    /// All actions zero on the given complex.
    pub fn trivial(g: &TwoTermAlgebra<S>, complex: TwoTermComplex<S>) -> Self {
        let (n0, n1) = (g.dim0(), g.dim1());
        let (m0, m1) = (complex.dim0(), complex.dim1());
        Representation2 {
            complex,
            left0_v0: Tensor::zeros(&[n0, m0, m0]),
            left0_v1: Tensor::zeros(&[n0, m1, m1]),
            right0_v0: Tensor::zeros(&[m0, n0, m0]),
            right0_v1: Tensor::zeros(&[m1, n0, m1]),
            left1: Tensor::zeros(&[n1, m0, m1]),
            right1: Tensor::zeros(&[m0, n1, m1]),
            tri_l: Tensor::zeros(&[n0, n0, m0, m1]),
            tri_m: Tensor::zeros(&[n0, m0, n0, m1]),
            tri_r: Tensor::zeros(&[m0, n0, n0, m1]),
        }
    }

    pub fn dim0(&self) -> usize {
        self.complex.dim0()
    }

    pub fn dim1(&self) -> usize {
        self.complex.dim1()
    }

    /// Verify every tensor's shape against `g` and the complex.
    pub fn check_shapes(&self, g: &TwoTermAlgebra<S>) -> Result<()> {
        let (n0, n1) = (g.dim0(), g.dim1());
        let (m0, m1) = (self.dim0(), self.dim1());
        expect_shape("diff", self.complex.diff.shape(), &[m1, m0])?;
        expect_shape("left0_v0", self.left0_v0.shape(), &[n0, m0, m0])?;
        expect_shape("left0_v1", self.left0_v1.shape(), &[n0, m1, m1])?;
        expect_shape("right0_v0", self.right0_v0.shape(), &[m0, n0, m0])?;
        expect_shape("right0_v1", self.right0_v1.shape(), &[m1, n0, m1])?;
        expect_shape("left1", self.left1.shape(), &[n1, m0, m1])?;
        expect_shape("right1", self.right1.shape(), &[m0, n1, m1])?;
        expect_shape("tri_l", self.tri_l.shape(), &[n0, n0, m0, m1])?;
        expect_shape("tri_m", self.tri_m.shape(), &[n0, m0, n0, m1])?;
        expect_shape("tri_r", self.tri_r.shape(), &[m0, n0, n0, m1])
    }

    pub fn del(&self, m: &[S]) -> Vector<S> {
        self.complex.apply(m)
    }
    /// `x⊳u`, `u ∈ V0`.
    pub fn l0(&self, x: &[S], u: &[S]) -> Vector<S> {
        self.left0_v0.apply2(x, u)
    }
    /// `x⊳m`, `m ∈ V1`.
    pub fn l0m(&self, x: &[S], m: &[S]) -> Vector<S> {
        self.left0_v1.apply2(x, m)
    }
    /// `u⊲x`, `u ∈ V0`.
    pub fn r0(&self, u: &[S], x: &[S]) -> Vector<S> {
        self.right0_v0.apply2(u, x)
    }
    /// `m⊲x`, `m ∈ V1`.
    pub fn r0m(&self, m: &[S], x: &[S]) -> Vector<S> {
        self.right0_v1.apply2(m, x)
    }
    /// `a⊳u`.
    pub fn l1(&self, a: &[S], u: &[S]) -> Vector<S> {
        self.left1.apply2(a, u)
    }
    /// `u⊲a`.
    pub fn r1(&self, u: &[S], a: &[S]) -> Vector<S> {
        self.right1.apply2(u, a)
    }
    /// `(x,y)⊳u`.
    pub fn tl(&self, x: &[S], y: &[S], u: &[S]) -> Vector<S> {
        self.tri_l.apply3(x, y, u)
    }
    /// `x⊳u⊲y`.
    pub fn tm(&self, x: &[S], u: &[S], y: &[S]) -> Vector<S> {
        self.tri_m.apply3(x, u, y)
    }
    /// `u⊲(x,y)`.
    pub fn tr(&self, u: &[S], x: &[S], y: &[S]) -> Vector<S> {
        self.tri_r.apply3(u, x, y)
    }
}

/// The adjoint representation of `g` on its own complex: every action is the
/// corresponding product or `l3` of `g`.
pub fn adjoint_representation<S: Scalar>(g: &TwoTermAlgebra<S>) -> Representation2<S> {
    Representation2 {
        complex: g.complex.clone(),
        left0_v0: g.l2_00.clone(),
        left0_v1: g.l2_01.clone(),
        right0_v0: g.l2_00.clone(),
        right0_v1: g.l2_10.clone(),
        left1: g.l2_10.clone(),
        right1: g.l2_01.clone(),
        tri_l: g.l3.clone(),
        tri_m: g.l3.clone(),
        tri_r: g.l3.clone(),
    }
}

/// All representation axioms on every basis tuple. `R01`–`R16` are the
/// action and trilinear compatibilities; `RC1`–`RC6` say that the actions
/// commute with the differentials.
///
/// * `R01` (xy)⊳u − x⊳(y⊳u) = ∂((x,y)⊳u)
/// * `R02` (xy)⊳m − x⊳(y⊳m) = (x,y)⊳∂m
/// * `R03` (xa)⊳u − x⊳(a⊳u) = (x,da)⊳u
/// * `R04` (ax)⊳u − a⊳(x⊳u) = (da,x)⊳u
/// * `R05` (x⊳u)⊲y − x⊳(u⊲y) = ∂(x⊳u⊲y)
/// * `R06` (x⊳m)⊲y − x⊳(m⊲y) = x⊳(∂m)⊲y
/// * `R07` (x⊳u)⊲a − x⊳(u⊲a) = x⊳u⊲(da)
/// * `R08` (a⊳u)⊲y − a⊳(u⊲y) = (da)⊳u⊲y
/// * `R09` (u⊲x)⊲y − u⊲(xy) = ∂(u⊲(x,y))
/// * `R10` (m⊲x)⊲y − m⊲(xy) = ∂m⊲(x,y)
/// * `R11` (u⊲x)⊲a − u⊲(xa) = u⊲(x,da)
/// * `R12` (u⊲a)⊲x − u⊲(ax) = u⊲(da,x)
/// * `R13` x⊳(u⊲(y,z)) + (x⊳u⊲y)⊲z = (x⊳u)⊲(y,z) − x⊳(u⊲y)⊲z + x⊳u⊲(yz)
/// * `R14` x⊳(y⊳u⊲z) + ((x,y)⊳u)⊲z = (xy)⊳u⊲z − x⊳(y⊳u)⊲z + (x,y)⊳(u⊲z)
/// * `R15` x⊳((y,z)⊳u) + l3(x,y,z)⊳u = (xy,z)⊳u − (x,yz)⊳u + (x,y)⊳(z⊳u)
/// * `R16` u⊲l3(x,y,z) + (u⊲(x,y))⊲z = (u⊲x)⊲(y,z) − u⊲(xy,z) + u⊲(x,yz)
/// * `RC1` ∂(x⊳m) = x⊳∂m,   `RC2` ∂(u⊲a) = u⊲da,   `RC3` ∂(m⊲x) = ∂m⊲x
/// * `RC4` ∂(a⊳u) = da⊳u,   `RC5` ∂m⊲a = m⊲da,     `RC6` da⊳m = a⊳∂m
pub fn check_representation<S: Scalar>(g: &TwoTermAlgebra<S>, r: &Representation2<S>) -> Result<CheckReport<S>> {
    g.check_shapes()?;
    r.check_shapes(g)?;
    let (n0, n1, m0, m1) = (g.dim0(), g.dim1(), r.dim0(), r.dim1());
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let u = |i| Vector::<S>::unit(m0, i);
    let m = |i| Vector::<S>::unit(m1, i);
    let mut rep = CheckReport::new();

    rep.family("R01", "(x,y,u)", &[n0, n0, m0], |t| {
        let (x, y, u) = (x(t[0]), x(t[1]), u(t[2]));
        (r.l0(&g.m00(&x, &y), &u) - r.l0(&x, &r.l0(&y, &u)), r.del(&r.tl(&x, &y, &u)))
    });
    rep.family("R02", "(x,y,m)", &[n0, n0, m1], |t| {
        let (x, y, m) = (x(t[0]), x(t[1]), m(t[2]));
        (r.l0m(&g.m00(&x, &y), &m) - r.l0m(&x, &r.l0m(&y, &m)), r.tl(&x, &y, &r.del(&m)))
    });
    rep.family("R03", "(x,a,u)", &[n0, n1, m0], |t| {
        let (x, a, u) = (x(t[0]), a(t[1]), u(t[2]));
        (r.l1(&g.m01(&x, &a), &u) - r.l0m(&x, &r.l1(&a, &u)), r.tl(&x, &g.d(&a), &u))
    });
    rep.family("R04", "(a,x,u)", &[n1, n0, m0], |t| {
        let (a, x, u) = (a(t[0]), x(t[1]), u(t[2]));
        (r.l1(&g.m10(&a, &x), &u) - r.l1(&a, &r.l0(&x, &u)), r.tl(&g.d(&a), &x, &u))
    });
    rep.family("R05", "(x,u,y)", &[n0, m0, n0], |t| {
        let (x, u, y) = (x(t[0]), u(t[1]), x(t[2]));
        (r.r0(&r.l0(&x, &u), &y) - r.l0(&x, &r.r0(&u, &y)), r.del(&r.tm(&x, &u, &y)))
    });
    rep.family("R06", "(x,m,y)", &[n0, m1, n0], |t| {
        let (x, m, y) = (x(t[0]), m(t[1]), x(t[2]));
        (r.r0m(&r.l0m(&x, &m), &y) - r.l0m(&x, &r.r0m(&m, &y)), r.tm(&x, &r.del(&m), &y))
    });
    rep.family("R07", "(x,u,a)", &[n0, m0, n1], |t| {
        let (x, u, a) = (x(t[0]), u(t[1]), a(t[2]));
        (r.r1(&r.l0(&x, &u), &a) - r.l0m(&x, &r.r1(&u, &a)), r.tm(&x, &u, &g.d(&a)))
    });
    rep.family("R08", "(a,u,y)", &[n1, m0, n0], |t| {
        let (a, u, y) = (a(t[0]), u(t[1]), x(t[2]));
        (r.r0m(&r.l1(&a, &u), &y) - r.l1(&a, &r.r0(&u, &y)), r.tm(&g.d(&a), &u, &y))
    });
    rep.family("R09", "(u,x,y)", &[m0, n0, n0], |t| {
        let (u, x, y) = (u(t[0]), x(t[1]), x(t[2]));
        (r.r0(&r.r0(&u, &x), &y) - r.r0(&u, &g.m00(&x, &y)), r.del(&r.tr(&u, &x, &y)))
    });
    rep.family("R10", "(m,x,y)", &[m1, n0, n0], |t| {
        let (m, x, y) = (m(t[0]), x(t[1]), x(t[2]));
        (r.r0m(&r.r0m(&m, &x), &y) - r.r0m(&m, &g.m00(&x, &y)), r.tr(&r.del(&m), &x, &y))
    });
    rep.family("R11", "(u,x,a)", &[m0, n0, n1], |t| {
        let (u, x, a) = (u(t[0]), x(t[1]), a(t[2]));
        (r.r1(&r.r0(&u, &x), &a) - r.r1(&u, &g.m01(&x, &a)), r.tr(&u, &x, &g.d(&a)))
    });
    rep.family("R12", "(u,a,x)", &[m0, n1, n0], |t| {
        let (u, a, x) = (u(t[0]), a(t[1]), x(t[2]));
        (r.r0m(&r.r1(&u, &a), &x) - r.r1(&u, &g.m10(&a, &x)), r.tr(&u, &g.d(&a), &x))
    });
    rep.family("R13", "(x,u,y,z)", &[n0, m0, n0, n0], |t| {
        let (x, u, y, z) = (x(t[0]), u(t[1]), x(t[2]), x(t[3]));
        let lhs = r.l0m(&x, &r.tr(&u, &y, &z)) + r.r0m(&r.tm(&x, &u, &y), &z);
        let rhs = r.tr(&r.l0(&x, &u), &y, &z) - r.tm(&x, &r.r0(&u, &y), &z) + r.tm(&x, &u, &g.m00(&y, &z));
        (lhs, rhs)
    });
    rep.family("R14", "(x,y,u,z)", &[n0, n0, m0, n0], |t| {
        let (x, y, u, z) = (x(t[0]), x(t[1]), u(t[2]), x(t[3]));
        let lhs = r.l0m(&x, &r.tm(&y, &u, &z)) + r.r0m(&r.tl(&x, &y, &u), &z);
        let rhs = r.tm(&g.m00(&x, &y), &u, &z) - r.tm(&x, &r.l0(&y, &u), &z) + r.tl(&x, &y, &r.r0(&u, &z));
        (lhs, rhs)
    });
    rep.family("R15", "(x,y,z,u)", &[n0, n0, n0, m0], |t| {
        let (x, y, z, u) = (x(t[0]), x(t[1]), x(t[2]), u(t[3]));
        let lhs = r.l0m(&x, &r.tl(&y, &z, &u)) + r.l1(&g.l3(&x, &y, &z), &u);
        let rhs = r.tl(&g.m00(&x, &y), &z, &u) - r.tl(&x, &g.m00(&y, &z), &u) + r.tl(&x, &y, &r.l0(&z, &u));
        (lhs, rhs)
    });
    rep.family("R16", "(u,x,y,z)", &[m0, n0, n0, n0], |t| {
        let (u, x, y, z) = (u(t[0]), x(t[1]), x(t[2]), x(t[3]));
        let lhs = r.r1(&u, &g.l3(&x, &y, &z)) + r.r0m(&r.tr(&u, &x, &y), &z);
        let rhs = r.tr(&r.r0(&u, &x), &y, &z) - r.tr(&u, &g.m00(&x, &y), &z) + r.tr(&u, &x, &g.m00(&y, &z));
        (lhs, rhs)
    });
    rep.family("RC1", "(x,m)", &[n0, m1], |t| {
        let (x, m) = (x(t[0]), m(t[1]));
        (r.del(&r.l0m(&x, &m)), r.l0(&x, &r.del(&m)))
    });
    rep.family("RC2", "(u,a)", &[m0, n1], |t| {
        let (u, a) = (u(t[0]), a(t[1]));
        (r.del(&r.r1(&u, &a)), r.r0(&u, &g.d(&a)))
    });
    rep.family("RC3", "(m,x)", &[m1, n0], |t| {
        let (m, x) = (m(t[0]), x(t[1]));
        (r.del(&r.r0m(&m, &x)), r.r0(&r.del(&m), &x))
    });
    rep.family("RC4", "(a,u)", &[n1, m0], |t| {
        let (a, u) = (a(t[0]), u(t[1]));
        (r.del(&r.l1(&a, &u)), r.l0(&g.d(&a), &u))
    });
    rep.family("RC5", "(m,a)", &[m1, n1], |t| {
        let (m, a) = (m(t[0]), a(t[1]));
        (r.r1(&r.del(&m), &a), r.r0m(&m, &g.d(&a)))
    });
    rep.family("RC6", "(a,m)", &[n1, m1], |t| {
        let (a, m) = (a(t[0]), m(t[1]));
        (r.l0m(&g.d(&a), &m), r.l1(&a, &r.del(&m)))
    });
    Ok(rep)
}
