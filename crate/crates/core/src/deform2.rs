//! Infinitesimal deformations: a base structure perturbed by
//! `d + λψ`, `· + λ{ω, μ, ν}`, `l3 + λθ1 + λ²θ2`, checked exactly as
//! polynomials in `λ`, plus Nijenhuis operators and the trivial deformations
//! they generate.

use crate::algebra2::{check_algebra, check_homomorphism, Homomorphism2, TwoTermAlgebra, TwoTermComplex};
use crate::cohom2::{Cochain2, CochainDims};
use crate::error::{expect_shape, require, Result};
use crate::exactlin::{Poly, Rational};
use crate::report::{CheckReport, CoefficientFailure};
use crate::tensor::{Tensor, Vector};

/// A base algebra with a first-order perturbation `(ψ, ω, μ, ν, θ1)` valued
/// in the algebra itself and an optional second-order `θ2` for `l3`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyStructure {
    pub base: TwoTermAlgebra,
    pub first_order: Cochain2,
    pub second_order_l3: Option<Tensor>,
}

/// Cochain dimensions for coefficients in the adjoint representation.
pub fn adjoint_dims(g: &TwoTermAlgebra) -> CochainDims {
    CochainDims { n0: g.dim0(), n1: g.dim1(), m0: g.dim0(), m1: g.dim1() }
}

impl PolyStructure {
    pub fn new(base: TwoTermAlgebra, first_order: Cochain2, second_order_l3: Option<Tensor>) -> Result<Self> {
        let p = PolyStructure { base, first_order, second_order_l3 };
        p.check_shapes()?;
        Ok(p)
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.base.check_shapes()?;
        self.first_order.check_shapes(adjoint_dims(&self.base))?;
        if let Some(t) = &self.second_order_l3 {
            expect_shape("theta2", t.shape(), self.base.l3.shape())?;
        }
        Ok(())
    }

    /// The deformed structure with constants in `ℚ[λ]`.
    pub fn to_poly(&self) -> TwoTermAlgebra<Poly> {
        let lam = |t: &Tensor, k: usize| t.map(|c| Poly::monomial(c.clone(), k));
        let b = &self.base;
        let c = &self.first_order;
        let mut l3 = b.l3.lift::<Poly>().add(&lam(&c.theta, 1));
        if let Some(t2) = &self.second_order_l3 {
            l3 = l3.add(&lam(t2, 2));
        }
        TwoTermAlgebra {
            complex: TwoTermComplex { diff: b.complex.diff.lift::<Poly>().add(&lam(&c.psi, 1)) },
            l2_00: b.l2_00.lift::<Poly>().add(&lam(&c.omega, 1)),
            l2_01: b.l2_01.lift::<Poly>().add(&lam(&c.mu, 1)),
            l2_10: b.l2_10.lift::<Poly>().add(&lam(&c.nu, 1)),
            l3,
        }
    }

    /// The deformed structure at a particular value of `λ`.
    pub fn specialize(&self, lambda: &Rational) -> TwoTermAlgebra {
        let p = self.to_poly();
        let ev = |t: &Tensor<Poly>| t.map(|q| q.eval(lambda));
        TwoTermAlgebra {
            complex: TwoTermComplex { diff: ev(&p.complex.diff) },
            l2_00: ev(&p.l2_00),
            l2_01: ev(&p.l2_01),
            l2_10: ev(&p.l2_10),
            l3: ev(&p.l3),
        }
    }
}

/// A 2-cochain with values in the algebra read as a structure of its own:
/// `d = ψ`, products `ω, μ, ν`, `l3 = θ`.
pub fn cochain_as_structure(c: &Cochain2) -> TwoTermAlgebra {
    TwoTermAlgebra {
        complex: TwoTermComplex { diff: c.psi.clone() },
        l2_00: c.omega.clone(),
        l2_01: c.mu.clone(),
        l2_10: c.nu.clone(),
        l3: c.theta.clone(),
    }
}

/// Outcome of the two-part generation criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct GenerationVerdict {
    /// No axiom fails at order `λ¹`: the perturbation is a 2-cocycle of the
    /// adjoint representation.
    pub cocycle_ok: bool,
    /// No axiom fails at order `λ²` or higher: without `θ2` this says the
    /// perturbation is itself an associative 2-algebra structure.
    pub standalone_ok: bool,
    /// Every nonzero coefficient of every axiom, by power of `λ`.
    pub failures: Vec<CoefficientFailure>,
}

impl GenerationVerdict {
    pub fn generates(&self) -> bool {
        self.cocycle_ok && self.standalone_ok
    }
}

/// Decide whether the perturbation defines a deformation, by running the
/// full axiom check over `ℚ[λ]` and reading off coefficients.
pub fn check_generates(p: &PolyStructure) -> Result<GenerationVerdict> {
    p.check_shapes()?;
    require("base algebra", &check_algebra(&p.base)?)?;
    let report = check_algebra(&p.to_poly())?;
    let failures = report.coefficient_failures();
    debug_assert!(failures.iter().all(|f| f.degree > 0));
    Ok(GenerationVerdict {
        cocycle_ok: failures.iter().all(|f| f.degree != 1),
        standalone_ok: failures.iter().all(|f| f.degree < 2),
        failures,
    })
}

/// `(N0, N1, N2)` with `N0: g0 → g0`, `N1: g1 → g1`, `N2: g0⊗g0 → g1`.
#[derive(Clone, Debug, PartialEq)]
pub struct NijenhuisCandidate {
    pub n0: Tensor,
    pub n1: Tensor,
    pub n2: Tensor,
}

impl NijenhuisCandidate {
    pub fn zero(dim0: usize, dim1: usize) -> Self {
        NijenhuisCandidate {
            n0: Tensor::zeros(&[dim0, dim0]),
            n1: Tensor::zeros(&[dim1, dim1]),
            n2: Tensor::zeros(&[dim0, dim0, dim1]),
        }
    }

    /// `(t·id, t·id, 0)`.
    pub fn scalar(dim0: usize, dim1: usize, t: &Rational) -> Self {
        NijenhuisCandidate {
            n0: Tensor::identity(dim0).scale(t),
            n1: Tensor::identity(dim1).scale(t),
            n2: Tensor::zeros(&[dim0, dim0, dim1]),
        }
    }

    pub fn check_shapes(&self, g: &TwoTermAlgebra) -> Result<()> {
        let (n0, n1) = (g.dim0(), g.dim1());
        expect_shape("N0", self.n0.shape(), &[n0, n0])?;
        expect_shape("N1", self.n1.shape(), &[n1, n1])?;
        expect_shape("N2", self.n2.shape(), &[n0, n0, n1])
    }
}

/// The maps induced by a candidate: the first-order part
/// `(ψ, ω, μ, ν, θ1)` and the second-order `θ2`.
///
/// * ψ(a) = dN1a − N0da
/// * ω(x,y) = N0x·y + x·N0y − N0(xy) + dN2(x,y)
/// * μ(x,a) = N0x·a + x·N1a − N1(xa) + N2(x,da)
/// * ν(a,x) = N1a·x + a·N0x − N1(ax) + N2(da,x)
/// * θ1 = Σ l3 with N0 in one slot − N1l3 + N2(xy,z) − N2(x,yz) + N2(x,y)·z − x·N2(y,z)
/// * θ2 = Σ l3 with N0 in two slots − N1θ1 + N2(ω(x,y),z) − N2(x,ω(y,z))
///   + N2(x,y)·N0z − N0x·N2(y,z)
fn induced_maps(g: &TwoTermAlgebra, n: &NijenhuisCandidate) -> (Cochain2, Tensor) {
    let (d0, d1) = (g.dim0(), g.dim1());
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let n0 = |v: &[Rational]| n.n0.apply1(v);
    let n1 = |v: &[Rational]| n.n1.apply1(v);
    let n2 = |u: &[Rational], v: &[Rational]| n.n2.apply2(u, v);
    let m = |u: &[Rational], v: &[Rational]| g.m00(u, v);

    let psi = Tensor::from_fn(&[d1], d0, |t| {
        let a = a(t[0]);
        g.d(&n1(&a)) - n0(&g.d(&a))
    });
    let omega = Tensor::from_fn(&[d0, d0], d0, |t| {
        let (x, y) = (x(t[0]), x(t[1]));
        m(&n0(&x), &y) + m(&x, &n0(&y)) - n0(&m(&x, &y)) + g.d(&n2(&x, &y))
    });
    let mu = Tensor::from_fn(&[d0, d1], d1, |t| {
        let (x, a) = (x(t[0]), a(t[1]));
        g.m01(&n0(&x), &a) + g.m01(&x, &n1(&a)) - n1(&g.m01(&x, &a)) + n2(&x, &g.d(&a))
    });
    let nu = Tensor::from_fn(&[d1, d0], d1, |t| {
        let (a, x) = (a(t[0]), x(t[1]));
        g.m10(&n1(&a), &x) + g.m10(&a, &n0(&x)) - n1(&g.m10(&a, &x)) + n2(&g.d(&a), &x)
    });
    let theta1 = Tensor::from_fn(&[d0, d0, d0], d1, |t| {
        let (x, y, z) = (x(t[0]), x(t[1]), x(t[2]));
        g.l3(&n0(&x), &y, &z) + g.l3(&x, &n0(&y), &z) + g.l3(&x, &y, &n0(&z)) - n1(&g.l3(&x, &y, &z))
            + n2(&m(&x, &y), &z)
            - n2(&x, &m(&y, &z))
            + g.m10(&n2(&x, &y), &z)
            - g.m01(&x, &n2(&y, &z))
    });
    let om = |u: &[Rational], v: &[Rational]| omega.apply2(u, v);
    let theta2 = Tensor::from_fn(&[d0, d0, d0], d1, |t| {
        let (x, y, z) = (x(t[0]), x(t[1]), x(t[2]));
        let (nx, ny, nz) = (n0(&x), n0(&y), n0(&z));
        g.l3(&nx, &ny, &z) + g.l3(&nx, &y, &nz) + g.l3(&x, &ny, &nz) - n1(&theta1.apply3(&x, &y, &z))
            + n2(&om(&x, &y), &z)
            - n2(&x, &om(&y, &z))
            + g.m10(&n2(&x, &y), &nz)
            - g.m01(&nx, &n2(&y, &z))
    });
    (Cochain2 { psi, omega, mu, nu, theta: theta1 }, theta2)
}

/// Nijenhuis conditions on every basis tuple, with `ψ, ω, μ, ν, θ2` as in
/// [`nijenhuis_deformation`]:
///
/// * `i`   N0ψ(a) = 0
/// * `ii`  N0ω(x,y) = N0x·N0y
/// * `iii` N1μ(x,a) = N0x·N1a + N2(x,ψa)
/// * `iv`  N1ν(a,x) = N1a·N0x + N2(ψa,x)
/// * `v`   N1θ2(x,y,z) = l3(N0x,N0y,N0z)
///
/// With `N2 = 0` these are the conditions on `(N0, N1)` alone.
pub fn check_nijenhuis(g: &TwoTermAlgebra, n: &NijenhuisCandidate) -> Result<CheckReport> {
    g.check_shapes()?;
    n.check_shapes(g)?;
    let (d0, d1) = (g.dim0(), g.dim1());
    let (c, theta2) = induced_maps(g, n);
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let n0 = |v: &[Rational]| n.n0.apply1(v);
    let n1 = |v: &[Rational]| n.n1.apply1(v);
    let n2 = |u: &[Rational], v: &[Rational]| n.n2.apply2(u, v);
    let mut r = CheckReport::new();
    r.family("i", "(a)", &[d1], |t| (n0(&c.psi.at(t)), Vector::zeros(d0)));
    r.family("ii", "(x,y)", &[d0, d0], |t| {
        let (x, y) = (x(t[0]), x(t[1]));
        (n0(&c.omega.at(t)), g.m00(&n0(&x), &n0(&y)))
    });
    r.family("iii", "(x,a)", &[d0, d1], |t| {
        let (x, a) = (x(t[0]), a(t[1]));
        (n1(&c.mu.at(t)), g.m01(&n0(&x), &n1(&a)) + n2(&x, &c.psi.apply1(&a)))
    });
    r.family("iv", "(a,x)", &[d1, d0], |t| {
        let (a, x) = (a(t[0]), x(t[1]));
        (n1(&c.nu.at(t)), g.m10(&n1(&a), &n0(&x)) + n2(&c.psi.apply1(&a), &x))
    });
    r.family("v", "(x,y,z)", &[d0, d0, d0], |t| {
        let (x, y, z) = (x(t[0]), x(t[1]), x(t[2]));
        (n1(&theta2.at(t)), g.l3(&n0(&x), &n0(&y), &n0(&z)))
    });
    Ok(r)
}

/// The deformation induced by a candidate. When the candidate passes
/// [`check_nijenhuis`], `T = (id + λN0, id + λN1, λN2)` is a homomorphism
/// from this deformation to the base, so the deformation is trivial.
pub fn nijenhuis_deformation(g: &TwoTermAlgebra, n: &NijenhuisCandidate) -> Result<PolyStructure> {
    g.check_shapes()?;
    n.check_shapes(g)?;
    require("base algebra", &check_algebra(g)?)?;
    let (first_order, theta2) = induced_maps(g, n);
    PolyStructure::new(g.clone(), first_order, Some(theta2))
}

/// `T = (id + λN0, id + λN1, λN2)` as a homomorphism over `ℚ[λ]`.
pub fn trivializing_map(n: &NijenhuisCandidate) -> Homomorphism2<Poly> {
    let (d0, d1) = (n.n0.out_dim(), n.n1.out_dim());
    let lam = |t: &Tensor| t.map(|c| Poly::monomial(c.clone(), 1));
    Homomorphism2 {
        f0: Tensor::<Poly>::identity(d0).add(&lam(&n.n0)),
        f1: Tensor::<Poly>::identity(d1).add(&lam(&n.n1)),
        f2: lam(&n.n2),
    }
}

/// Check that `T` maps the deformation `p` to its base as an exact
/// polynomial identity. Condition ids are those of
/// [`check_homomorphism`]; use [`CheckReport::coefficient_failures`] for the
/// failing powers of `λ`.
pub fn check_trivializing(p: &PolyStructure, n: &NijenhuisCandidate) -> Result<CheckReport<Poly>> {
    p.check_shapes()?;
    n.check_shapes(&p.base)?;
    check_homomorphism(&p.to_poly(), &p.base.lift::<Poly>(), &trivializing_map(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom2::{d1_apply, d2_residual, Cochain1};
    use crate::exactlin::rat;
    use crate::fixtures;
    use crate::rep2::adjoint_representation;

    #[test]
    fn specialize_examples() {
        let u = fixtures::fix_u();
        let mut c = Cochain2::zero(adjoint_dims(&u));
        c.omega.set(&[0, 0, 0], rat(1));
        let p = PolyStructure::new(u.clone(), c.clone(), None).unwrap();
        assert_eq!(p.specialize(&rat(0)), u);
        let s = p.specialize(&rat(1));
        assert_eq!(s.l2_00.data(), &[rat(2)]);
        assert_eq!(s.l2_01, u.l2_01);
        let z = PolyStructure::new(fixtures::fix_z(), c.clone(), None).unwrap();
        assert_eq!(z.specialize(&rat(1)), cochain_as_structure(&c));
    }

    #[test]
    fn coboundary_perturbation_is_cocycle() {
        let u = fixtures::fix_u();
        let r = adjoint_representation(&u);
        let phi = Cochain1 { phi: Tensor::identity(1), phi1: Tensor::identity(1), chi: Tensor::zeros(&[1, 1, 1]) };
        let c = d1_apply(&u, &r, &phi).unwrap();
        let v = check_generates(&PolyStructure::new(u, c.clone(), None).unwrap()).unwrap();
        assert!(v.cocycle_ok);
        assert_eq!(v.standalone_ok, check_algebra(&cochain_as_structure(&c)).unwrap().passed());
        assert!(v.generates());
    }

    #[test]
    fn zero_perturbation_generates() {
        let g = fixtures::fix_l();
        let p = PolyStructure::new(g.clone(), Cochain2::zero(adjoint_dims(&g)), None).unwrap();
        assert!(check_generates(&p).unwrap().generates());
    }

    #[test]
    fn nijenhuis_examples() {
        for g in [fixtures::fix_z(), fixtures::fix_u(), fixtures::fix_d(), fixtures::fix_l()] {
            assert!(check_nijenhuis(&g, &NijenhuisCandidate::scalar(1, 1, &rat(1))).unwrap().passed());
            assert!(check_nijenhuis(&g, &NijenhuisCandidate::zero(1, 1)).unwrap().passed());
        }
        let d = fixtures::fix_d();
        let mut n = NijenhuisCandidate::scalar(1, 1, &rat(1));
        n.n1 = n.n1.scale(&rat(2));
        let r = check_nijenhuis(&d, &n).unwrap();
        assert!(r.failed().contains(&"i"));
        // on FIX-L only N0 = N1 survives condition (v)
        let mut n = NijenhuisCandidate::scalar(1, 1, &rat(1));
        n.n1 = n.n1.scale(&rat(2));
        assert_eq!(check_nijenhuis(&fixtures::fix_l(), &n).unwrap().failed(), vec!["v"]);
    }

    #[test]
    fn identity_operator_on_fix_u() {
        let u = fixtures::fix_u();
        let n = NijenhuisCandidate::scalar(1, 1, &rat(1));
        let p = nijenhuis_deformation(&u, &n).unwrap();
        let c = &p.first_order;
        assert!(c.psi.is_zero() && c.theta.is_zero());
        assert!(p.second_order_l3.as_ref().unwrap().is_zero());
        assert_eq!((c.omega.data(), c.mu.data(), c.nu.data()), (&[rat(1)][..], &[rat(1)][..], &[rat(1)][..]));
        let s = p.specialize(&rat(1));
        assert_eq!(s.l2_00.data(), &[rat(2)]);
        assert!(check_algebra(&s).unwrap().passed());
        assert!(check_trivializing(&p, &n).unwrap().passed());
        let r = adjoint_representation(&u);
        assert!(d2_residual(&u, &r, c).unwrap().is_zero());
        let as_cochain = Cochain1 { phi: n.n0.clone(), phi1: n.n1.clone(), chi: n.n2.clone() };
        assert_eq!(&d1_apply(&u, &r, &as_cochain).unwrap(), c);
    }

    #[test]
    fn trivializing_detects_nontrivial_perturbation() {
        let u = fixtures::fix_u();
        let mut c = Cochain2::zero(adjoint_dims(&u));
        c.omega.set(&[0, 0, 0], rat(1));
        let p = PolyStructure::new(u, c, None).unwrap();
        let rep = check_trivializing(&p, &NijenhuisCandidate::zero(1, 1)).unwrap();
        let f = rep.coefficient_failures();
        assert_eq!(f.len(), 1);
        assert_eq!((f[0].condition.as_str(), f[0].degree), ("ii", 1));
        let rep = check_trivializing(
            &PolyStructure::new(fixtures::fix_u(), Cochain2::zero(adjoint_dims(&fixtures::fix_u())), None).unwrap(),
            &NijenhuisCandidate::zero(1, 1),
        )
        .unwrap();
        assert!(rep.passed());
    }
}
