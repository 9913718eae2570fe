//! Abelian extensions of crossed modules: `W ⊂ 𝔭̂` and `V ⊂ 𝔥̂` with zero
//! multiplication on `W` and `W` acting trivially on `V`.

use super::{
    check_crossed_module, check_xmod_homomorphism, check_xmod_representation, twisted_sum, xmod_assemble,
    xmod_d2_residual, CrossedModule, XCochain1, XCochain2, XCochainDims, XModRepresentation,
};
use crate::algebra2::Bimodule;
use crate::error::{expect_shape, require, Error, Result};
use crate::exactlin::{Rational, RationalMatrix};
use crate::ext2::{check_index_set, embed, is_right_inverse, kernel_is_span, restrict};
use crate::tensor::{Tensor, Vector};

/// Extension `total` of `base` with `W = span(sub0) ⊂ 𝔭̂`,
/// `V = span(sub1) ⊂ 𝔥̂`, projection `(p0, p1)` and splitting `(s0, s1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct XModExtension {
    pub total: CrossedModule,
    pub base: CrossedModule,
    pub sub0: Vec<usize>,
    pub sub1: Vec<usize>,
    pub p0: Tensor,
    pub p1: Tensor,
    pub s0: Tensor,
    pub s1: Tensor,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidExtension(msg.into())
}

impl XModExtension {
    pub fn kernel_dims(&self) -> (usize, usize) {
        (self.sub0.len(), self.sub1.len())
    }

    fn inc_w(&self, w: &[Rational]) -> Vector {
        embed(self.total.dim_p(), &self.sub0, w)
    }

    fn inc_v(&self, v: &[Rational]) -> Vector {
        embed(self.total.dim_h(), &self.sub1, v)
    }

    fn w(&self, v: &[Rational]) -> Result<Vector> {
        restrict(v, &self.sub0).ok_or_else(|| invalid("value expected in W has components outside it"))
    }

    fn v(&self, v: &[Rational]) -> Result<Vector> {
        restrict(v, &self.sub1).ok_or_else(|| invalid("value expected in V has components outside it"))
    }

    pub fn validate(&self) -> Result<()> {
        let (t, b) = (&self.total, &self.base);
        t.check_shapes()?;
        b.check_shapes()?;
        let (pp, hh, p, h) = (t.dim_p(), t.dim_h(), b.dim_p(), b.dim_h());
        expect_shape("p0", self.p0.shape(), &[pp, p])?;
        expect_shape("p1", self.p1.shape(), &[hh, h])?;
        expect_shape("s0", self.s0.shape(), &[p, pp])?;
        expect_shape("s1", self.s1.shape(), &[h, hh])?;
        check_index_set("W", &self.sub0, pp)?;
        check_index_set("V", &self.sub1, hh)?;
        require("extension total", &check_crossed_module(t)?)?;
        require("extension base", &check_crossed_module(b)?)?;
        require("projection", &check_xmod_homomorphism(t, b, &self.p0, &self.p1)?)?;
        if !kernel_is_span(&self.p0, &self.sub0) || !kernel_is_span(&self.p1, &self.sub1) {
            return Err(invalid("kernel of the projection is not the span of the V, W basis"));
        }
        if !is_right_inverse(&self.p0, &self.s0) || !is_right_inverse(&self.p1, &self.s1) {
            return Err(invalid("splitting is not a right inverse of the projection"));
        }
        let (kw, kv) = self.kernel_dims();
        for i in 0..kw {
            let wi = self.inc_w(&Vector::unit(kw, i));
            for j in 0..kw {
                if !t.mul(&wi, &self.inc_w(&Vector::unit(kw, j))).is_zero() {
                    return Err(invalid(format!("W is not abelian: W[{i}]·W[{j}] ≠ 0")));
                }
            }
            for j in 0..kv {
                let vj = self.inc_v(&Vector::unit(kv, j));
                if !t.xa(&wi, &vj).is_zero() || !t.ax(&vj, &wi).is_zero() {
                    return Err(invalid(format!("W[{i}] acts nontrivially on V[{j}]")));
                }
            }
        }
        Ok(())
    }

    pub fn with_splitting(&self, s0: Tensor, s1: Tensor) -> Result<XModExtension> {
        let e = XModExtension { s0, s1, ..self.clone() };
        e.validate()?;
        Ok(e)
    }
}

/// The representation on `(V, W, φ)` induced by the splitting:
/// `x·v = σ0(x)·v`, `x·w = σ0(x)·w` and on the right likewise,
/// `w⊲a = w·σ1(a)`, `a⊳w = σ1(a)·w`, `φ = f̂|V`.
pub fn xmod_extract_representation(e: &XModExtension) -> Result<XModRepresentation> {
    e.validate()?;
    let t = &e.total;
    let (p, h) = (e.base.dim_p(), e.base.dim_h());
    let (kw, kv) = e.kernel_dims();
    let s0 = |i: usize| e.s0.at(&[i]);
    let s1 = |i: usize| e.s1.at(&[i]);
    let wv = |i: usize| e.inc_w(&Vector::unit(kw, i));
    let vv = |i: usize| e.inc_v(&Vector::unit(kv, i));
    let mut err = None;
    let mut keep = |r: Result<Vector>, k: usize| {
        r.unwrap_or_else(|x| {
            err.get_or_insert(x);
            Vector::zeros(k)
        })
    };
    let v_left = Tensor::from_fn(&[p, kv], kv, |ix| keep(e.v(&t.xa(&s0(ix[0]), &vv(ix[1]))), kv));
    let v_right = Tensor::from_fn(&[kv, p], kv, |ix| keep(e.v(&t.ax(&vv(ix[0]), &s0(ix[1]))), kv));
    let w_left = Tensor::from_fn(&[p, kw], kw, |ix| keep(e.w(&t.mul(&s0(ix[0]), &wv(ix[1]))), kw));
    let w_right = Tensor::from_fn(&[kw, p], kw, |ix| keep(e.w(&t.mul(&wv(ix[0]), &s0(ix[1]))), kw));
    let phi = Tensor::from_fn(&[kv], kw, |ix| keep(e.w(&t.f(&vv(ix[0]))), kw));
    let tr_l = Tensor::from_fn(&[kw, h], kv, |ix| keep(e.v(&t.xa(&wv(ix[0]), &s1(ix[1]))), kv));
    let tr_r = Tensor::from_fn(&[h, kw], kv, |ix| keep(e.v(&t.ax(&s1(ix[0]), &wv(ix[1]))), kv));
    if let Some(x) = err {
        return Err(x);
    }
    Ok(XModRepresentation {
        v_mod: Bimodule { left: v_left, right: v_right },
        w_mod: Bimodule { left: w_left, right: w_right },
        phi,
        tr_l,
        tr_r,
    })
}

/// * ψ(a) = f̂σ1(a) − σ0(f(a))
/// * ω(x,y) = σ0x·σ0y − σ0(xy)
/// * μ(x,a) = σ0x·σ1a − σ1(x·a)
/// * ν(a,x) = σ1a·σ0x − σ1(a·x)
pub fn xmod_extract_cocycle(e: &XModExtension) -> Result<XCochain2> {
    e.validate()?;
    let (t, b) = (&e.total, &e.base);
    let (p, h) = (b.dim_p(), b.dim_h());
    let (kw, kv) = e.kernel_dims();
    let s0 = |v: &[Rational]| e.s0.apply1(v);
    let s1 = |v: &[Rational]| e.s1.apply1(v);
    let mut err = None;
    let mut keep = |r: Result<Vector>, k: usize| {
        r.unwrap_or_else(|x| {
            err.get_or_insert(x);
            Vector::zeros(k)
        })
    };
    let psi = Tensor::from_fn(&[h], kw, |ix| {
        let a = b.eh(ix[0]);
        keep(e.w(&(t.f(&s1(&a)) - s0(&b.f(&a)))), kw)
    });
    let omega = Tensor::from_fn(&[p, p], kw, |ix| {
        let (x, y) = (b.ep(ix[0]), b.ep(ix[1]));
        keep(e.w(&(t.mul(&s0(&x), &s0(&y)) - s0(&b.mul(&x, &y)))), kw)
    });
    let mu = Tensor::from_fn(&[p, h], kv, |ix| {
        let (x, a) = (b.ep(ix[0]), b.eh(ix[1]));
        keep(e.v(&(t.xa(&s0(&x), &s1(&a)) - s1(&b.xa(&x, &a)))), kv)
    });
    let nu = Tensor::from_fn(&[h, p], kv, |ix| {
        let (a, x) = (b.eh(ix[0]), b.ep(ix[1]));
        keep(e.v(&(t.ax(&s1(&a), &s0(&x)) - s1(&b.ax(&a, &x)))), kv)
    });
    if let Some(x) = err {
        return Err(x);
    }
    Ok(XCochain2 { psi, omega, mu, nu })
}

/// Both extracted pieces at once.
pub fn xmod_extension_extract(e: &XModExtension) -> Result<(XModRepresentation, XCochain2)> {
    Ok((xmod_extract_representation(e)?, xmod_extract_cocycle(e)?))
}

/// The extension `(𝔥⊕V, 𝔭⊕W, f̂)` of a 2-cocycle:
///
/// * f̂(a+v) = f(a) + ψ(a) + φ(v)
/// * (x+w)(x'+w') = xx' + ω(x,x') + x·w' + w·x'
/// * (x+w)·(a+v) = x·a + μ(x,a) + x·v + w⊲a
/// * (a+v)·(x+w) = a·x + ν(a,x) + v·x + a⊳w
pub fn xmod_extension_build(x: &CrossedModule, r: &XModRepresentation, c: &XCochain2) -> Result<XModExtension> {
    require("representation", &check_xmod_representation(x, r)?)?;
    let dims = XCochainDims::of(x, r);
    c.check_shapes(dims)?;
    let res = xmod_d2_residual(x, r, c)?;
    if !res.is_zero() {
        return Err(Error::NotCocycle(res.nonzero().join(", ")));
    }
    let total = twisted_sum(x, r, c);
    let (p, h) = (dims.p, dims.h);
    let (pp, hh) = (p + dims.w, h + dims.v);
    let proj = |n: usize, nn: usize| {
        Tensor::from_fn(&[nn], n, |ix| if ix[0] < n { Vector::unit(n, ix[0]) } else { Vector::zeros(n) })
    };
    let sect = |n: usize, nn: usize| Tensor::from_fn(&[n], nn, |ix| Vector::unit(nn, ix[0]));
    let e = XModExtension {
        total,
        base: x.clone(),
        sub0: (p..pp).collect(),
        sub1: (h..hh).collect(),
        p0: proj(p, pp),
        p1: proj(h, hh),
        s0: sect(p, pp),
        s1: sect(h, hh),
    };
    e.validate()?;
    Ok(e)
}

/// Result of comparing two crossed-module extensions.
#[derive(Clone, Debug, PartialEq)]
pub enum XEquivalence {
    /// `c1 − c2 = D1(witness)`; `(f0, f1)` is the verified homomorphism.
    Equivalent {
        witness: XCochain1,
        f0: Tensor,
        f1: Tensor,
    },
    Inequivalent {
        rank_d1: usize,
        rank_with_difference: usize,
    },
}

pub fn xmod_check_equivalence(e1: &XModExtension, e2: &XModExtension) -> Result<XEquivalence> {
    e1.validate()?;
    e2.validate()?;
    if e1.base != e2.base {
        return Err(Error::RepresentationMismatch("the extensions have different base crossed modules".into()));
    }
    let r = xmod_extract_representation(e1)?;
    if r != xmod_extract_representation(e2)? {
        return Err(Error::RepresentationMismatch("induced representations differ".into()));
    }
    let target = xmod_extract_cocycle(e1)?.sub(&xmod_extract_cocycle(e2)?).flatten();
    let m = xmod_assemble(&e1.base, &r)?;
    let Some(sol) = m.d1.solve(&target) else {
        let aug = m.d1.hstack(&RationalMatrix::from_columns(target.len(), &[target]));
        return Ok(XEquivalence::Inequivalent { rank_d1: m.d1.rank(), rank_with_difference: aug.rank() });
    };
    let witness = XCochain1::from_flat(m.dims, &sol)?;
    let (t1, t2) = (&e1.total, &e2.total);
    // F0(σx + w) = σ'x + λ0(x) + w, F1(σa + v) = σ'a + λ1(a) + v
    let f0 = Tensor::from_fn(&[t1.dim_p()], t2.dim_p(), |ix| {
        let al = t1.ep(ix[0]);
        let x = e1.p0.apply1(&al);
        let rest = e1.w(&(al - e1.s0.apply1(&x))).expect("validated extension");
        e2.s0.apply1(&x) + e2.inc_w(&(witness.n0.apply1(&x) + rest))
    });
    let f1 = Tensor::from_fn(&[t1.dim_h()], t2.dim_h(), |ix| {
        let be = t1.eh(ix[0]);
        let a = e1.p1.apply1(&be);
        let rest = e1.v(&(be - e1.s1.apply1(&a))).expect("validated extension");
        e2.s1.apply1(&a) + e2.inc_v(&(witness.n1.apply1(&a) + rest))
    });
    require("equivalence map", &check_xmod_homomorphism(t1, t2, &f0, &f1)?)?;
    let (kw, kv) = e1.kernel_dims();
    let fixes_w = (0..kw).all(|i| {
        let w = Vector::<Rational>::unit(kw, i);
        f0.apply1(&e1.inc_w(&w)) == e2.inc_w(&w)
    });
    let fixes_v = (0..kv).all(|i| {
        let v = Vector::<Rational>::unit(kv, i);
        f1.apply1(&e1.inc_v(&v)) == e2.inc_v(&v)
    });
    if !fixes_w || !fixes_v || f0.compose(&e2.p0) != e1.p0 || f1.compose(&e2.p1) != e1.p1 {
        return Err(invalid("induced map does not commute with inclusions and projections"));
    }
    Ok(XEquivalence::Equivalent { witness, f0, f1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::fixtures;
    use crate::xmod::{xmod_adjoint, xmod_d1};

    #[test]
    fn round_trip_on_fix_x_f() {
        let x = fixtures::fix_x_f();
        let r = xmod_adjoint(&x);
        let n = XCochain1 { n0: Tensor::identity(1), n1: Tensor::identity(1).scale(&rat(3)) };
        let c = xmod_d1(&x, &r, &n).unwrap();
        let e = xmod_extension_build(&x, &r, &c).unwrap();
        assert_eq!(xmod_extension_extract(&e).unwrap(), (r.clone(), c.clone()));
        let z = xmod_extension_build(&x, &r, &XCochain2::zero(XCochainDims::of(&x, &r))).unwrap();
        match xmod_check_equivalence(&e, &z).unwrap() {
            XEquivalence::Equivalent { witness, .. } => {
                assert_eq!(xmod_d1(&x, &r, &witness).unwrap(), c);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn other_splitting() {
        let x = fixtures::fix_x();
        let r = xmod_adjoint(&x);
        let e = xmod_extension_build(&x, &r, &XCochain2::zero(XCochainDims::of(&x, &r))).unwrap();
        let e2 = e
            .with_splitting(
                Tensor::from_data(&[1, 2], vec![rat(1), rat(2)]),
                Tensor::from_data(&[1, 2], vec![rat(1), rat(-5)]),
            )
            .unwrap();
        assert_eq!(xmod_extract_representation(&e2).unwrap(), r);
        let c2 = xmod_extract_cocycle(&e2).unwrap();
        assert!(xmod_d2_residual(&x, &r, &c2).unwrap().is_zero());
    }

    #[test]
    fn zero_module_inequivalent_pair() {
        let x = CrossedModule::zero(1, 1);
        let r = XModRepresentation::zero(&x, 1, 1);
        let d = XCochainDims::of(&x, &r);
        let mut c = XCochain2::zero(d);
        c.psi.set(&[0, 0], rat(1));
        let e1 = xmod_extension_build(&x, &r, &XCochain2::zero(d)).unwrap();
        let e2 = xmod_extension_build(&x, &r, &c).unwrap();
        assert_eq!(
            xmod_check_equivalence(&e1, &e2).unwrap(),
            XEquivalence::Inequivalent { rank_d1: 0, rank_with_difference: 1 }
        );
    }
}
