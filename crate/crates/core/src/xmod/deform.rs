//! Infinitesimal deformations `f + λψ`, `· + λω`, `x·a + λμ`, `a·x + λν` of a
//! crossed module and the trivial ones coming from Nijenhuis operators.

use super::{
    check_crossed_module, check_xmod_homomorphism, xmod_adjoint, xmod_d1, CrossedModule, XCochain1, XCochain2,
    XCochainDims,
};
use crate::algebra2::{AssocAlgebra, Bimodule};
use crate::deform2::GenerationVerdict;
use crate::error::{expect_shape, require, Result};
use crate::exactlin::{Poly, Rational};
use crate::report::CheckReport;
use crate::tensor::{Tensor, Vector};

/// A crossed module with a first-order perturbation valued in itself.
#[derive(Clone, Debug, PartialEq)]
pub struct XPolyStructure {
    pub base: CrossedModule,
    pub first_order: XCochain2,
}

fn adjoint_dims(x: &CrossedModule) -> XCochainDims {
    XCochainDims { p: x.dim_p(), h: x.dim_h(), w: x.dim_p(), v: x.dim_h() }
}

impl XPolyStructure {
    pub fn new(base: CrossedModule, first_order: XCochain2) -> Result<Self> {
        base.check_shapes()?;
        first_order.check_shapes(adjoint_dims(&base))?;
        Ok(XPolyStructure { base, first_order })
    }

    pub fn to_poly(&self) -> CrossedModule<Poly> {
        let lam = |t: &Tensor| t.map(|c| Poly::monomial(c.clone(), 1));
        let (b, c) = (&self.base, &self.first_order);
        CrossedModule {
            p_alg: AssocAlgebra { mul: b.p_alg.mul.lift::<Poly>().add(&lam(&c.omega)) },
            h_mod: Bimodule {
                left: b.h_mod.left.lift::<Poly>().add(&lam(&c.mu)),
                right: b.h_mod.right.lift::<Poly>().add(&lam(&c.nu)),
            },
            f_map: b.f_map.lift::<Poly>().add(&lam(&c.psi)),
        }
    }

    pub fn specialize(&self, lambda: &Rational) -> CrossedModule {
        let p = self.to_poly();
        let ev = |t: &Tensor<Poly>| t.map(|q| q.eval(lambda));
        CrossedModule {
            p_alg: AssocAlgebra { mul: ev(&p.p_alg.mul) },
            h_mod: Bimodule { left: ev(&p.h_mod.left), right: ev(&p.h_mod.right) },
            f_map: ev(&p.f_map),
        }
    }
}

/// The crossed-module axioms over `ℚ[λ]`: order `λ¹` is the adjoint
/// 2-cocycle condition, order `λ²` says `(𝔥, 𝔭, ψ)` with `ω, μ, ν` is a
/// crossed module in its own right.
pub fn xmod_check_generates(p: &XPolyStructure) -> Result<GenerationVerdict> {
    require("base crossed module", &check_crossed_module(&p.base)?)?;
    p.first_order.check_shapes(adjoint_dims(&p.base))?;
    let failures = check_crossed_module(&p.to_poly())?.coefficient_failures();
    Ok(GenerationVerdict {
        cocycle_ok: failures.iter().all(|f| f.degree != 1),
        standalone_ok: failures.iter().all(|f| f.degree < 2),
        failures,
    })
}

/// `(N0: 𝔭 → 𝔭, N1: 𝔥 → 𝔥)`.
#[derive(Clone, Debug, PartialEq)]
pub struct XNijenhuisCandidate {
    pub n0: Tensor,
    pub n1: Tensor,
}

impl XNijenhuisCandidate {
    pub fn scalar(dim_p: usize, dim_h: usize, t: &Rational) -> Self {
        XNijenhuisCandidate { n0: Tensor::identity(dim_p).scale(t), n1: Tensor::identity(dim_h).scale(t) }
    }

    pub fn check_shapes(&self, x: &CrossedModule) -> Result<()> {
        expect_shape("N0", self.n0.shape(), &[x.dim_p(), x.dim_p()])?;
        expect_shape("N1", self.n1.shape(), &[x.dim_h(), x.dim_h()])
    }

    fn as_cochain(&self) -> XCochain1 {
        XCochain1 { n0: self.n0.clone(), n1: self.n1.clone() }
    }
}

/// Nijenhuis conditions, with `·_N` the deformed products `ω, μ, ν` of
/// [`xmod_nijenhuis_deformation`]:
///
/// * `i` f N1(a) = N0 f(a)
/// * `ii` N0(x ·_N y) = N0(x)·N0(y)
/// * `iii` N1(x ·_N a) = N0(x)·N1(a)
/// * `iv` N1(a ·_N x) = N1(a)·N0(x)
pub fn xmod_check_nijenhuis(x: &CrossedModule, n: &XNijenhuisCandidate) -> Result<CheckReport> {
    n.check_shapes(x)?;
    require("crossed module", &check_crossed_module(x)?)?;
    let c = xmod_d1(x, &xmod_adjoint(x), &n.as_cochain())?;
    let (p, h) = (x.dim_p(), x.dim_h());
    let n0 = |v: &[Rational]| n.n0.apply1(v);
    let n1 = |v: &[Rational]| n.n1.apply1(v);
    let (xp, ah) = (|i| x.ep(i), |i| x.eh(i));
    let mut r = CheckReport::new();
    r.family("i", "(a)", &[h], |t| {
        let a = ah(t[0]);
        (x.f(&n1(&a)), n0(&x.f(&a)))
    });
    r.family("ii", "(x,y)", &[p, p], |t| {
        let (u, y): (Vector, Vector) = (xp(t[0]), xp(t[1]));
        (n0(&c.omega.apply2(&u, &y)), x.mul(&n0(&u), &n0(&y)))
    });
    r.family("iii", "(x,a)", &[p, h], |t| {
        let (u, a) = (xp(t[0]), ah(t[1]));
        (n1(&c.mu.apply2(&u, &a)), x.xa(&n0(&u), &n1(&a)))
    });
    r.family("iv", "(a,x)", &[h, p], |t| {
        let (a, u) = (ah(t[0]), xp(t[1]));
        (n1(&c.nu.apply2(&a, &u)), x.ax(&n1(&a), &n0(&u)))
    });
    Ok(r)
}

/// The deformation `(ψ, ω, μ, ν) = D1(N0, N1)` in the adjoint
/// representation.
pub fn xmod_nijenhuis_deformation(x: &CrossedModule, n: &XNijenhuisCandidate) -> Result<XPolyStructure> {
    n.check_shapes(x)?;
    require("crossed module", &check_crossed_module(x)?)?;
    let c = xmod_d1(x, &xmod_adjoint(x), &n.as_cochain())?;
    XPolyStructure::new(x.clone(), c)
}

/// `T = (id + λN0, id + λN1)` from the deformation to its base, checked as
/// a polynomial identity.
pub fn xmod_check_trivializing(p: &XPolyStructure, n: &XNijenhuisCandidate) -> Result<CheckReport<Poly>> {
    n.check_shapes(&p.base)?;
    let lam = |t: &Tensor| t.map(|c| Poly::monomial(c.clone(), 1));
    let t0 = Tensor::<Poly>::identity(p.base.dim_p()).add(&lam(&n.n0));
    let t1 = Tensor::<Poly>::identity(p.base.dim_h()).add(&lam(&n.n1));
    let base = CrossedModule {
        p_alg: AssocAlgebra { mul: p.base.p_alg.mul.lift() },
        h_mod: Bimodule { left: p.base.h_mod.left.lift(), right: p.base.h_mod.right.lift() },
        f_map: p.base.f_map.lift(),
    };
    check_xmod_homomorphism(&p.to_poly(), &base, &t0, &t1)
}
