//! Crossed modules over associative algebras: a `𝔭`-bimodule `𝔥` with an
//! equivariant map `f: 𝔥 → 𝔭` satisfying `f(a)·b = a·f(b)`. These are the
//! strict associative 2-algebras in other clothes; this module has the
//! axiom checker, the correspondence, representations and semidirect
//! products, and the submodules mirror the cohomology, deformation and
//! extension theory of the general case.

mod cohom;
mod deform;
mod ext;

pub use cohom::{
    xmod_assemble, xmod_d1, xmod_d2_residual, xmod_h2, xmod_is_coboundary, XCoboundaryMatrices, XCochain1, XCochain2,
    XCochainDims, XSecondCohomology,
};
pub use deform::{
    xmod_check_generates, xmod_check_nijenhuis, xmod_check_trivializing, xmod_nijenhuis_deformation,
    XNijenhuisCandidate, XPolyStructure,
};
pub use ext::{
    xmod_check_equivalence, xmod_extension_build, xmod_extension_extract, xmod_extract_cocycle,
    xmod_extract_representation, XEquivalence, XModExtension,
};

use crate::algebra2::{
    check_algebra, check_associative, check_bimodule, check_homomorphism, AssocAlgebra, Bimodule, Homomorphism2,
    TwoTermAlgebra, TwoTermComplex,
};
use crate::error::{expect_shape, require, Error, Result};
use crate::exactlin::{Rational, Scalar};
use crate::report::CheckReport;
use crate::tensor::{Tensor, Vector};

/// `(𝔥, 𝔭, f)`. `f_map` has shape `[dim 𝔥, dim 𝔭]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossedModule<S = Rational> {
    pub p_alg: AssocAlgebra<S>,
    pub h_mod: Bimodule<S>,
    pub f_map: Tensor<S>,
}

impl<S: Scalar> CrossedModule<S> {
    pub fn new(p_alg: AssocAlgebra<S>, h_mod: Bimodule<S>, f_map: Tensor<S>) -> Result<Self> {
        let x = CrossedModule { p_alg, h_mod, f_map };
        x.check_shapes()?;
        Ok(x)
    }

    pub fn zero(dim_p: usize, dim_h: usize) -> Self {
        CrossedModule {
            p_alg: AssocAlgebra::zero(dim_p),
            h_mod: Bimodule::zero(dim_p, dim_h),
            f_map: Tensor::zeros(&[dim_h, dim_p]),
        }
    }

    pub fn dim_p(&self) -> usize {
        self.p_alg.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.h_mod.dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let (p, h) = (self.dim_p(), self.dim_h());
        expect_shape("p multiplication", self.p_alg.mul.shape(), &[p, p, p])?;
        self.h_mod.check_shapes(p)?;
        expect_shape("f", self.f_map.shape(), &[h, p])
    }

    pub fn f(&self, a: &[S]) -> Vector<S> {
        self.f_map.apply1(a)
    }

    pub fn mul(&self, x: &[S], y: &[S]) -> Vector<S> {
        self.p_alg.mul(x, y)
    }

    /// `x·a`, `x ∈ 𝔭`, `a ∈ 𝔥`.
    pub fn xa(&self, x: &[S], a: &[S]) -> Vector<S> {
        self.h_mod.act_left(x, a)
    }

    /// `a·x`.
    pub fn ax(&self, a: &[S], x: &[S]) -> Vector<S> {
        self.h_mod.act_right(a, x)
    }

    pub fn ep(&self, i: usize) -> Vector<S> {
        Vector::unit(self.dim_p(), i)
    }

    pub fn eh(&self, i: usize) -> Vector<S> {
        Vector::unit(self.dim_h(), i)
    }

    /// The strict 2-algebra with `g0 = 𝔭`, `g1 = 𝔥`, `d = f`, unchecked.
    pub fn as_strict(&self) -> TwoTermAlgebra<S> {
        let p = self.dim_p();
        TwoTermAlgebra {
            complex: TwoTermComplex { diff: self.f_map.clone() },
            l2_00: self.p_alg.mul.clone(),
            l2_01: self.h_mod.left.clone(),
            l2_10: self.h_mod.right.clone(),
            l3: Tensor::zeros(&[p, p, p, self.dim_h()]),
        }
    }
}

/// All crossed-module axioms on basis tuples. Besides the structure of
/// `𝔭` (`p.assoc`) and of `𝔥` (`h.left`, `h.middle`, `h.right`):
///
/// * `equiv_l` f(x·a) = x·f(a)
/// * `equiv_r` f(a·x) = f(a)·x
/// * `peiffer` f(a)·b = a·f(b)
pub fn check_crossed_module<S: Scalar>(x: &CrossedModule<S>) -> Result<CheckReport<S>> {
    x.check_shapes()?;
    let (p, h) = (x.dim_p(), x.dim_h());
    let mut r = CheckReport::new();
    r.extend_prefixed("p.", check_associative(&x.p_alg)?);
    r.extend_prefixed("h.", check_bimodule(&x.p_alg, &x.h_mod)?);
    r.family("equiv_l", "(x,a)", &[p, h], |t| {
        let (u, a) = (x.ep(t[0]), x.eh(t[1]));
        (x.f(&x.xa(&u, &a)), x.mul(&u, &x.f(&a)))
    });
    r.family("equiv_r", "(a,x)", &[h, p], |t| {
        let (a, u) = (x.eh(t[0]), x.ep(t[1]));
        (x.f(&x.ax(&a, &u)), x.mul(&x.f(&a), &u))
    });
    r.family("peiffer", "(a,b)", &[h, h], |t| {
        let (a, b) = (x.eh(t[0]), x.eh(t[1]));
        (x.xa(&x.f(&a), &b), x.ax(&a, &x.f(&b)))
    });
    Ok(r)
}

/// The crossed module of a strict associative 2-algebra.
pub fn from_strict(g: &TwoTermAlgebra) -> Result<CrossedModule> {
    g.check_shapes()?;
    if !g.is_strict() {
        return Err(Error::NotStrict);
    }
    require("algebra", &check_algebra(g)?)?;
    Ok(CrossedModule {
        p_alg: AssocAlgebra { mul: g.l2_00.clone() },
        h_mod: Bimodule { left: g.l2_01.clone(), right: g.l2_10.clone() },
        f_map: g.complex.diff.clone(),
    })
}

/// The strict associative 2-algebra of a crossed module.
pub fn to_strict(x: &CrossedModule) -> Result<TwoTermAlgebra> {
    require("crossed module", &check_crossed_module(x)?)?;
    Ok(x.as_strict())
}

/// Homomorphism conditions for `(F0: 𝔭 → 𝔭', F1: 𝔥 → 𝔥')`, checked as a
/// strict homomorphism of the associated 2-algebras (ids `i`, `ii`,
/// `iii1`, `iii2`; `iv` is vacuous).
pub fn check_xmod_homomorphism<S: Scalar>(
    src: &CrossedModule<S>,
    tgt: &CrossedModule<S>,
    f0: &Tensor<S>,
    f1: &Tensor<S>,
) -> Result<CheckReport<S>> {
    let p = src.dim_p();
    let h = Homomorphism2 { f0: f0.clone(), f1: f1.clone(), f2: Tensor::zeros(&[p, p, tgt.dim_h()]) };
    check_homomorphism(&src.as_strict(), &tgt.as_strict(), &h)
}

/// A representation `(V, W, φ)`: `𝔭`-bimodules `V` and `W`, `φ: V → W`,
/// `tr_l[w][a]` = `w⊲a ∈ V` and `tr_r[a][w]` = `a⊳w ∈ V`.
#[derive(Clone, Debug, PartialEq)]
pub struct XModRepresentation<S = Rational> {
    pub v_mod: Bimodule<S>,
    pub w_mod: Bimodule<S>,
    pub phi: Tensor<S>,
    pub tr_l: Tensor<S>,
    pub tr_r: Tensor<S>,
}

impl<S: Scalar> XModRepresentation<S> {
    /// Zero actions on `V = ℚ^dv`, `W = ℚ^dw`.
    pub fn zero(x: &CrossedModule<S>, dv: usize, dw: usize) -> Self {
        let (p, h) = (x.dim_p(), x.dim_h());
        XModRepresentation {
            v_mod: Bimodule::zero(p, dv),
            w_mod: Bimodule::zero(p, dw),
            phi: Tensor::zeros(&[dv, dw]),
            tr_l: Tensor::zeros(&[dw, h, dv]),
            tr_r: Tensor::zeros(&[h, dw, dv]),
        }
    }

    pub fn dim_v(&self) -> usize {
        self.v_mod.dim()
    }

    pub fn dim_w(&self) -> usize {
        self.w_mod.dim()
    }

    pub fn check_shapes(&self, x: &CrossedModule<S>) -> Result<()> {
        let (p, h, v, w) = (x.dim_p(), x.dim_h(), self.dim_v(), self.dim_w());
        self.v_mod.check_shapes(p)?;
        self.w_mod.check_shapes(p)?;
        expect_shape("phi", self.phi.shape(), &[v, w])?;
        expect_shape("tr_l", self.tr_l.shape(), &[w, h, v])?;
        expect_shape("tr_r", self.tr_r.shape(), &[h, w, v])
    }

    pub fn phi(&self, v: &[S]) -> Vector<S> {
        self.phi.apply1(v)
    }

    /// `x·v` in `V`.
    pub fn xv(&self, x: &[S], v: &[S]) -> Vector<S> {
        self.v_mod.act_left(x, v)
    }

    pub fn vx(&self, v: &[S], x: &[S]) -> Vector<S> {
        self.v_mod.act_right(v, x)
    }

    /// `x·w` in `W`.
    pub fn xw(&self, x: &[S], w: &[S]) -> Vector<S> {
        self.w_mod.act_left(x, w)
    }

    pub fn wx(&self, w: &[S], x: &[S]) -> Vector<S> {
        self.w_mod.act_right(w, x)
    }

    /// `w⊲a`.
    pub fn wa(&self, w: &[S], a: &[S]) -> Vector<S> {
        self.tr_l.apply2(w, a)
    }

    /// `a⊳w`.
    pub fn aw(&self, a: &[S], w: &[S]) -> Vector<S> {
        self.tr_r.apply2(a, w)
    }
}

/// `(V, W, φ) = (𝔥, 𝔭, f)` with `w⊲a = w·a` and `a⊳w = a·w`.
pub fn xmod_adjoint<S: Scalar>(x: &CrossedModule<S>) -> XModRepresentation<S> {
    XModRepresentation {
        v_mod: x.h_mod.clone(),
        w_mod: Bimodule::regular(&x.p_alg),
        phi: x.f_map.clone(),
        tr_l: x.h_mod.left.clone(),
        tr_r: x.h_mod.right.clone(),
    }
}

/// Representation axioms on basis tuples. Besides the bimodule axioms of
/// `V` and `W` (prefixes `V.`, `W.`):
///
/// * `phi_l` φ(x·v) = x·φ(v), `phi_r` φ(v·x) = φ(v)·x
/// * `phi_wa` φ(w⊲a) = w·f(a), `phi_aw` φ(a⊳w) = f(a)·w
/// * `peiffer_v` f(a)·v = a⊳φ(v), `peiffer_w` φ(v)⊲a = v·f(a)
/// * `c1` x·(w⊲a) = (x·w)⊲a, `c2` w⊲(x·a) = (w·x)⊲a
/// * `c3` a⊳(w·x) = (a⊳w)·x, `c4` a⊳(x·w) = (a·x)⊳w
/// * `c5` x·(a⊳w) = (x·a)⊳w, `c6` w⊲(a·x) = (w⊲a)·x
///
/// These say exactly that the semidirect product is a crossed module.
pub fn check_xmod_representation<S: Scalar>(x: &CrossedModule<S>, r: &XModRepresentation<S>) -> Result<CheckReport<S>> {
    r.check_shapes(x)?;
    require("crossed module", &check_crossed_module(x)?)?;
    let (p, h, dv, dw) = (x.dim_p(), x.dim_h(), r.dim_v(), r.dim_w());
    let xp = |i| x.ep(i);
    let ah = |i| x.eh(i);
    let v = |i| Vector::<S>::unit(dv, i);
    let w = |i| Vector::<S>::unit(dw, i);
    let mut rep = CheckReport::new();
    rep.extend_prefixed("V.", check_bimodule(&x.p_alg, &r.v_mod)?);
    rep.extend_prefixed("W.", check_bimodule(&x.p_alg, &r.w_mod)?);
    rep.family("phi_l", "(x,v)", &[p, dv], |t| {
        let (x, v) = (xp(t[0]), v(t[1]));
        (r.phi(&r.xv(&x, &v)), r.xw(&x, &r.phi(&v)))
    });
    rep.family("phi_r", "(v,x)", &[dv, p], |t| {
        let (v, x) = (v(t[0]), xp(t[1]));
        (r.phi(&r.vx(&v, &x)), r.wx(&r.phi(&v), &x))
    });
    rep.family("phi_wa", "(w,a)", &[dw, h], |t| {
        let (w, a) = (w(t[0]), ah(t[1]));
        (r.phi(&r.wa(&w, &a)), r.wx(&w, &x.f(&a)))
    });
    rep.family("phi_aw", "(a,w)", &[h, dw], |t| {
        let (a, w) = (ah(t[0]), w(t[1]));
        (r.phi(&r.aw(&a, &w)), r.xw(&x.f(&a), &w))
    });
    rep.family("peiffer_v", "(a,v)", &[h, dv], |t| {
        let (a, v) = (ah(t[0]), v(t[1]));
        (r.xv(&x.f(&a), &v), r.aw(&a, &r.phi(&v)))
    });
    rep.family("peiffer_w", "(v,a)", &[dv, h], |t| {
        let (v, a) = (v(t[0]), ah(t[1]));
        (r.wa(&r.phi(&v), &a), r.vx(&v, &x.f(&a)))
    });
    rep.family("c1", "(x,w,a)", &[p, dw, h], |t| {
        let (u, w, a) = (xp(t[0]), w(t[1]), ah(t[2]));
        (r.xv(&u, &r.wa(&w, &a)), r.wa(&r.xw(&u, &w), &a))
    });
    rep.family("c2", "(w,x,a)", &[dw, p, h], |t| {
        let (w, u, a) = (w(t[0]), xp(t[1]), ah(t[2]));
        (r.wa(&w, &x.xa(&u, &a)), r.wa(&r.wx(&w, &u), &a))
    });
    rep.family("c3", "(a,w,x)", &[h, dw, p], |t| {
        let (a, w, u) = (ah(t[0]), w(t[1]), xp(t[2]));
        (r.aw(&a, &r.wx(&w, &u)), r.vx(&r.aw(&a, &w), &u))
    });
    rep.family("c4", "(a,x,w)", &[h, p, dw], |t| {
        let (a, u, w) = (ah(t[0]), xp(t[1]), w(t[2]));
        (r.aw(&a, &r.xw(&u, &w)), r.aw(&x.ax(&a, &u), &w))
    });
    rep.family("c5", "(x,a,w)", &[p, h, dw], |t| {
        let (u, a, w) = (xp(t[0]), ah(t[1]), w(t[2]));
        (r.xv(&u, &r.aw(&a, &w)), r.aw(&x.xa(&u, &a), &w))
    });
    rep.family("c6", "(w,a,x)", &[dw, h, p], |t| {
        let (w, a, u) = (w(t[0]), ah(t[1]), xp(t[2]));
        (r.wa(&w, &x.ax(&a, &u)), r.vx(&r.wa(&w, &a), &u))
    });
    Ok(rep)
}

/// `(𝔥⊕V, 𝔭⊕W, f̂)` with the cocycle twist `c` added in the `V`/`W`
/// components; `c = 0` is the semidirect product.
pub(crate) fn twisted_sum(x: &CrossedModule, r: &XModRepresentation, c: &XCochain2) -> CrossedModule {
    let (p, h, dv, dw) = (x.dim_p(), x.dim_h(), r.dim_v(), r.dim_w());
    let (pp, hh) = (p + dw, h + dv);
    let sp = |i: usize| {
        let e = Vector::<Rational>::unit(pp, i);
        (Vector(e[..p].to_vec()), Vector(e[p..].to_vec()))
    };
    let sh = |i: usize| {
        let e = Vector::<Rational>::unit(hh, i);
        (Vector(e[..h].to_vec()), Vector(e[h..].to_vec()))
    };
    let join = |a: Vector, b: Vector| {
        let mut v = a.0;
        v.extend(b.0);
        Vector(v)
    };
    let f_map = Tensor::from_fn(&[hh], pp, |t| {
        let (a, v) = sh(t[0]);
        join(x.f(&a), c.psi.apply1(&a) + r.phi(&v))
    });
    let mul = Tensor::from_fn(&[pp, pp], pp, |t| {
        let ((x1, w1), (x2, w2)) = (sp(t[0]), sp(t[1]));
        join(x.mul(&x1, &x2), c.omega.apply2(&x1, &x2) + r.xw(&x1, &w2) + r.wx(&w1, &x2))
    });
    let left = Tensor::from_fn(&[pp, hh], hh, |t| {
        let ((u, w), (a, v)) = (sp(t[0]), sh(t[1]));
        join(x.xa(&u, &a), c.mu.apply2(&u, &a) + r.xv(&u, &v) + r.wa(&w, &a))
    });
    let right = Tensor::from_fn(&[hh, pp], hh, |t| {
        let ((a, v), (u, w)) = (sh(t[0]), sp(t[1]));
        join(x.ax(&a, &u), c.nu.apply2(&a, &u) + r.vx(&v, &u) + r.aw(&a, &w))
    });
    CrossedModule { p_alg: AssocAlgebra { mul }, h_mod: Bimodule { left, right }, f_map }
}

/// The semidirect product `(𝔥⊕V, 𝔭⊕W, f+φ)`:
///
/// * (x+w)(x'+w') = xx' + x·w' + w·x'
/// * (x+w)·(a+v) = x·a + x·v + w⊲a
/// * (a+v)·(x+w) = a·x + v·x + a⊳w
///
/// The basis lists `𝔭` (resp. `𝔥`) first.
pub fn semidirect_product(x: &CrossedModule, r: &XModRepresentation) -> Result<CrossedModule> {
    require("representation", &check_xmod_representation(x, r)?)?;
    let dims = XCochainDims::of(x, r);
    Ok(twisted_sum(x, r, &XCochain2::zero(dims)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::fixtures;

    #[test]
    fn fixtures_are_crossed_modules() {
        for x in [fixtures::fix_x(), fixtures::fix_x_f()] {
            assert!(check_crossed_module(&x).unwrap().passed());
        }
    }

    #[test]
    fn doubled_right_action_breaks_equivariance() {
        let mut x = fixtures::fix_x_f();
        x.h_mod.right.set(&[0, 0, 0], rat(2));
        let r = check_crossed_module(&x).unwrap();
        let v = &r.condition("equiv_r").unwrap().violations[0];
        assert_eq!((v.lhs[0].clone(), v.rhs[0].clone()), (rat(2), rat(1)));
    }

    #[test]
    fn strict_round_trips() {
        for g in [fixtures::fix_z(), fixtures::fix_u(), fixtures::fix_d()] {
            let x = from_strict(&g).unwrap();
            assert!(check_crossed_module(&x).unwrap().passed());
            assert_eq!(to_strict(&x).unwrap(), g);
        }
        assert_eq!(from_strict(&fixtures::fix_u()).unwrap(), fixtures::fix_x());
        assert_eq!(from_strict(&fixtures::fix_l()), Err(Error::NotStrict));
    }

    #[test]
    fn adjoint_and_zero_representations() {
        for x in [fixtures::fix_x(), fixtures::fix_x_f()] {
            let r = check_xmod_representation(&x, &xmod_adjoint(&x)).unwrap();
            assert!(r.passed(), "{:?}", r.failed());
            assert!(check_xmod_representation(&x, &XModRepresentation::zero(&x, 0, 0)).unwrap().passed());
            assert!(check_xmod_representation(&x, &XModRepresentation::zero(&x, 2, 1)).unwrap().passed());
        }
        let x = fixtures::fix_x_f();
        let mut r = xmod_adjoint(&x);
        r.tr_r = Tensor::zeros(r.tr_r.shape());
        let rep = check_xmod_representation(&x, &r).unwrap();
        assert!(!rep.condition("phi_aw").unwrap().violations.is_empty());
    }

    #[test]
    fn semidirect_with_adjoint() {
        for x in [fixtures::fix_x(), fixtures::fix_x_f()] {
            let s = semidirect_product(&x, &xmod_adjoint(&x)).unwrap();
            assert_eq!((s.dim_h(), s.dim_p()), (2, 2));
            assert!(check_crossed_module(&s).unwrap().passed());
            // (0 + v)·(e + 0) = v·e = v
            let v = Vector(vec![rat(0), rat(1)]);
            let e = Vector(vec![rat(1), rat(0)]);
            assert_eq!(s.ax(&v, &e), v);
        }
    }
}
