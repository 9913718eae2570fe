//! Abelian extensions `0 → h → ĝ → g → 0` of associative 2-algebras, stored
//! with an explicit splitting: building from a 2-cocycle, extracting the
//! induced representation and cocycle, and deciding equivalence.

use num::Zero;

use crate::algebra2::{check_algebra, check_homomorphism, Homomorphism2, TwoTermAlgebra, TwoTermComplex};
use crate::cohom2::{assemble_matrices, d2_residual, verify_inputs, Cochain1, Cochain2, CochainDims};
use crate::error::{expect_shape, require, Error, Result};
use crate::exactlin::{Rational, RationalMatrix};
use crate::rep2::Representation2;
use crate::tensor::{Tensor, Vector};

/// An extension `ĝ` of `base` by the abelian ideal spanned by the basis
/// vectors `sub0 ⊂ ĝ0`, `sub1 ⊂ ĝ1`. `p0, p1` is the projection onto `base`
/// and `s0, s1` a splitting (`p∘s = id`).
#[derive(Clone, Debug, PartialEq)]
pub struct Extension2 {
    pub total: TwoTermAlgebra,
    pub base: TwoTermAlgebra,
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

/// Coordinates of `v` in the coordinate subspace `idx`; `None` if `v` has a
/// nonzero entry outside it.
pub(crate) fn restrict(v: &[Rational], idx: &[usize]) -> Option<Vector> {
    let inside: Vec<bool> = (0..v.len()).map(|i| idx.contains(&i)).collect();
    if v.iter().zip(&inside).any(|(c, &ins)| !ins && !c.is_zero()) {
        return None;
    }
    Some(Vector(idx.iter().map(|&i| v[i].clone()).collect()))
}

pub(crate) fn embed(n: usize, idx: &[usize], coords: &[Rational]) -> Vector {
    let mut v = Vector::zeros(n);
    for (&i, c) in idx.iter().zip(coords) {
        v[i] = c.clone();
    }
    v
}

pub(crate) fn check_index_set(what: &str, idx: &[usize], n: usize) -> Result<()> {
    for (k, &i) in idx.iter().enumerate() {
        if i >= n {
            return Err(invalid(format!("{what}[{k}] = {i} is out of range (dimension {n})")));
        }
        if idx[..k].contains(&i) {
            return Err(invalid(format!("{what} lists index {i} twice")));
        }
    }
    Ok(())
}

/// `ker(p) = span(idx)` for a linear map `p: [n, _]`.
pub(crate) fn kernel_is_span(p: &Tensor, idx: &[usize]) -> bool {
    let n = p.shape()[0];
    let kdim = p.to_matrix().kernel_basis().dim();
    kdim == idx.len() && idx.iter().all(|&i| p.at(&[i]).is_zero()) && n >= idx.len()
}

pub(crate) fn is_right_inverse(p: &Tensor, s: &Tensor) -> bool {
    s.compose(p) == Tensor::identity(p.out_dim())
}

impl Extension2 {
    pub fn h_dims(&self) -> (usize, usize) {
        (self.sub0.len(), self.sub1.len())
    }

    /// `h ∩ ĝ0 → ĝ0`.
    pub fn inc0(&self, u: &[Rational]) -> Vector {
        embed(self.total.dim0(), &self.sub0, u)
    }

    pub fn inc1(&self, m: &[Rational]) -> Vector {
        embed(self.total.dim1(), &self.sub1, m)
    }

    fn h0(&self, v: &[Rational]) -> Result<Vector> {
        restrict(v, &self.sub0).ok_or_else(|| invalid("value expected in h0 has components outside it"))
    }

    fn h1(&self, v: &[Rational]) -> Result<Vector> {
        restrict(v, &self.sub1).ok_or_else(|| invalid("value expected in h1 has components outside it"))
    }

    /// Verify every structural requirement; the first failure is reported.
    pub fn validate(&self) -> Result<()> {
        let (t, b) = (&self.total, &self.base);
        t.check_shapes()?;
        b.check_shapes()?;
        let (nn0, nn1, n0, n1) = (t.dim0(), t.dim1(), b.dim0(), b.dim1());
        expect_shape("p0", self.p0.shape(), &[nn0, n0])?;
        expect_shape("p1", self.p1.shape(), &[nn1, n1])?;
        expect_shape("s0", self.s0.shape(), &[n0, nn0])?;
        expect_shape("s1", self.s1.shape(), &[n1, nn1])?;
        check_index_set("h0", &self.sub0, nn0)?;
        check_index_set("h1", &self.sub1, nn1)?;
        require("extension total", &check_algebra(t)?)?;
        require("extension base", &check_algebra(b)?)?;
        let p = Homomorphism2 { f0: self.p0.clone(), f1: self.p1.clone(), f2: Tensor::zeros(&[nn0, nn0, n1]) };
        require("projection", &check_homomorphism(t, b, &p)?)?;
        if !kernel_is_span(&self.p0, &self.sub0) || !kernel_is_span(&self.p1, &self.sub1) {
            return Err(invalid("kernel of the projection is not the span of the h basis"));
        }
        if !is_right_inverse(&self.p0, &self.s0) || !is_right_inverse(&self.p1, &self.s1) {
            return Err(invalid("splitting is not a right inverse of the projection"));
        }
        let (u, m) = (|i| Vector::<Rational>::unit(nn0, self.sub0[i]), |i| Vector::<Rational>::unit(nn1, self.sub1[i]));
        let (k0, k1) = self.h_dims();
        let all = |v: &[Vector]| v.iter().all(|x| x.is_zero());
        for i in 0..k0 {
            for j in 0..k0 {
                if !all(&[t.m00(&u(i), &u(j))]) {
                    return Err(invalid(format!("h is not abelian: h0[{i}]·h0[{j}] ≠ 0")));
                }
            }
            for j in 0..k1 {
                if !all(&[t.m01(&u(i), &m(j)), t.m10(&m(j), &u(i))]) {
                    return Err(invalid(format!("h is not abelian: h0[{i}] and h1[{j}] multiply nontrivially")));
                }
            }
        }
        for i in 0..k0 {
            for j in 0..k0 {
                for z in 0..nn0 {
                    let w = Vector::<Rational>::unit(nn0, z);
                    let (a, b) = (u(i), u(j));
                    if !all(&[t.l3(&a, &b, &w), t.l3(&a, &w, &b), t.l3(&w, &a, &b)]) {
                        return Err(invalid(format!("h is not abelian: l3 with h0[{i}], h0[{j}] is nonzero")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Replace the splitting, validating the result.
    pub fn with_splitting(&self, s0: Tensor, s1: Tensor) -> Result<Extension2> {
        let e = Extension2 { s0, s1, ..self.clone() };
        e.validate()?;
        Ok(e)
    }

    fn h_complex(&self) -> Result<TwoTermComplex> {
        let (k0, k1) = self.h_dims();
        let mut diff = Tensor::zeros(&[k1, k0]);
        for j in 0..k1 {
            let v = self.h0(&self.total.d(&self.inc1(&Vector::unit(k1, j))))?;
            for (i, c) in v.iter().enumerate() {
                diff.set(&[j, i], c.clone());
            }
        }
        Ok(TwoTermComplex { diff })
    }
}

/// The representation of `g` on `h` induced by the splitting:
/// `x⊳u = σ0(x)·u`, `u⊲x = u·σ0(x)`, `a⊳u = σ1(a)·u`, `u⊲a = u·σ1(a)`,
/// and the trilinear actions are `l̂3` with one argument from `h`.
pub fn extract_representation(e: &Extension2) -> Result<Representation2> {
    e.validate()?;
    let t = &e.total;
    let (n0, n1) = (e.base.dim0(), e.base.dim1());
    let (k0, k1) = e.h_dims();
    let s0 = |i: usize| e.s0.at(&[i]);
    let s1 = |i: usize| e.s1.at(&[i]);
    let u = |i: usize| e.inc0(&Vector::unit(k0, i));
    let m = |i: usize| e.inc1(&Vector::unit(k1, i));
    let mut err = None;
    let mut h0 = |v: Vector| {
        e.h0(&v).unwrap_or_else(|x| {
            err.get_or_insert(x);
            Vector::zeros(k0)
        })
    };
    let left0_v0 = Tensor::from_fn(&[n0, k0], k0, |ix| h0(t.m00(&s0(ix[0]), &u(ix[1]))));
    let right0_v0 = Tensor::from_fn(&[k0, n0], k0, |ix| h0(t.m00(&u(ix[0]), &s0(ix[1]))));
    let mut err1 = None;
    let mut h1 = |v: Vector| {
        e.h1(&v).unwrap_or_else(|x| {
            err1.get_or_insert(x);
            Vector::zeros(k1)
        })
    };
    let left0_v1 = Tensor::from_fn(&[n0, k1], k1, |ix| h1(t.m01(&s0(ix[0]), &m(ix[1]))));
    let right0_v1 = Tensor::from_fn(&[k1, n0], k1, |ix| h1(t.m10(&m(ix[0]), &s0(ix[1]))));
    let left1 = Tensor::from_fn(&[n1, k0], k1, |ix| h1(t.m10(&s1(ix[0]), &u(ix[1]))));
    let right1 = Tensor::from_fn(&[k0, n1], k1, |ix| h1(t.m01(&u(ix[0]), &s1(ix[1]))));
    let tri_l = Tensor::from_fn(&[n0, n0, k0], k1, |ix| h1(t.l3(&s0(ix[0]), &s0(ix[1]), &u(ix[2]))));
    let tri_m = Tensor::from_fn(&[n0, k0, n0], k1, |ix| h1(t.l3(&s0(ix[0]), &u(ix[1]), &s0(ix[2]))));
    let tri_r = Tensor::from_fn(&[k0, n0, n0], k1, |ix| h1(t.l3(&u(ix[0]), &s0(ix[1]), &s0(ix[2]))));
    if let Some(x) = err.or(err1) {
        return Err(x);
    }
    Ok(Representation2 {
        complex: e.h_complex()?,
        left0_v0,
        left0_v1,
        right0_v0,
        right0_v1,
        left1,
        right1,
        tri_l,
        tri_m,
        tri_r,
    })
}

/// The 2-cocycle measuring how far the splitting is from a homomorphism:
///
/// * ψ(a) = d̂σ1(a) − σ0(da)
/// * ω(x,y) = σ0x·σ0y − σ0(xy)
/// * μ(x,a) = σ0x·σ1a − σ1(xa)
/// * ν(a,x) = σ1a·σ0x − σ1(ax)
/// * θ(x,y,z) = l̂3(σ0x,σ0y,σ0z) − σ1(l3(x,y,z))
pub fn extract_cocycle(e: &Extension2) -> Result<Cochain2> {
    e.validate()?;
    let (t, g) = (&e.total, &e.base);
    let (n0, n1) = (g.dim0(), g.dim1());
    let (k0, k1) = e.h_dims();
    let s0 = |v: &[Rational]| e.s0.apply1(v);
    let s1 = |v: &[Rational]| e.s1.apply1(v);
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let mut err = None;
    let mut h = |r: Result<Vector>, k: usize| {
        r.unwrap_or_else(|x| {
            err.get_or_insert(x);
            Vector::zeros(k)
        })
    };
    let psi = Tensor::from_fn(&[n1], k0, |ix| {
        let a = a(ix[0]);
        h(e.h0(&(t.d(&s1(&a)) - s0(&g.d(&a)))), k0)
    });
    let omega = Tensor::from_fn(&[n0, n0], k0, |ix| {
        let (x, y) = (x(ix[0]), x(ix[1]));
        h(e.h0(&(t.m00(&s0(&x), &s0(&y)) - s0(&g.m00(&x, &y)))), k0)
    });
    let mu = Tensor::from_fn(&[n0, n1], k1, |ix| {
        let (x, a) = (x(ix[0]), a(ix[1]));
        h(e.h1(&(t.m01(&s0(&x), &s1(&a)) - s1(&g.m01(&x, &a)))), k1)
    });
    let nu = Tensor::from_fn(&[n1, n0], k1, |ix| {
        let (a, x) = (a(ix[0]), x(ix[1]));
        h(e.h1(&(t.m10(&s1(&a), &s0(&x)) - s1(&g.m10(&a, &x)))), k1)
    });
    let theta = Tensor::from_fn(&[n0, n0, n0], k1, |ix| {
        let (x, y, z) = (x(ix[0]), x(ix[1]), x(ix[2]));
        h(e.h1(&(t.l3(&s0(&x), &s0(&y), &s0(&z)) - s1(&g.l3(&x, &y, &z)))), k1)
    });
    if let Some(x) = err {
        return Err(x);
    }
    Ok(Cochain2 { psi, omega, mu, nu, theta })
}

/// The extension `g ⊕ h` defined by a 2-cocycle, with
///
/// * d̂(a+m) = da + ψ(a) + ∂m
/// * (x+u)(y+v) = xy + ω(x,y) + x⊳v + u⊲y
/// * (x+u)(a+m) = xa + μ(x,a) + x⊳m + u⊲a
/// * (a+m)(x+u) = ax + ν(a,x) + a⊳u + m⊲x
/// * l̂3(x+u, y+v, z+w) = l3(x,y,z) + θ(x,y,z) + (x,y)⊳w + x⊳v⊲z + u⊲(y,z)
///
/// The basis of `ĝ` lists `g` first, then `h`; projection, inclusion and
/// splitting are the canonical ones.
pub fn build_extension(g: &TwoTermAlgebra, r: &Representation2, c: &Cochain2) -> Result<Extension2> {
    verify_inputs(g, r)?;
    let dims = CochainDims::of(g, r);
    c.check_shapes(dims)?;
    let res = d2_residual(g, r, c)?;
    if !res.is_zero() {
        return Err(Error::NotCocycle(res.nonzero().join(", ")));
    }
    let CochainDims { n0, n1, m0, m1 } = dims;
    let (nn0, nn1) = (n0 + m0, n1 + m1);
    let sp0 = |v: &[Rational]| (v[..n0].to_vec(), v[n0..].to_vec());
    let sp1 = |v: &[Rational]| (v[..n1].to_vec(), v[n1..].to_vec());
    let join = |gp: Vector, hp: Vector| {
        let mut v = gp.0;
        v.extend(hp.0);
        Vector(v)
    };
    let e0 = |i| Vector::<Rational>::unit(nn0, i);
    let e1 = |i| Vector::<Rational>::unit(nn1, i);

    let diff = Tensor::from_fn(&[nn1], nn0, |ix| {
        let (a, m) = sp1(&e1(ix[0]));
        join(g.d(&a), c.psi.apply1(&a) + r.del(&m))
    });
    let l2_00 = Tensor::from_fn(&[nn0, nn0], nn0, |ix| {
        let ((x, u), (y, v)) = (sp0(&e0(ix[0])), sp0(&e0(ix[1])));
        join(g.m00(&x, &y), c.omega.apply2(&x, &y) + r.l0(&x, &v) + r.r0(&u, &y))
    });
    let l2_01 = Tensor::from_fn(&[nn0, nn1], nn1, |ix| {
        let ((x, u), (a, m)) = (sp0(&e0(ix[0])), sp1(&e1(ix[1])));
        join(g.m01(&x, &a), c.mu.apply2(&x, &a) + r.l0m(&x, &m) + r.r1(&u, &a))
    });
    let l2_10 = Tensor::from_fn(&[nn1, nn0], nn1, |ix| {
        let ((a, m), (x, u)) = (sp1(&e1(ix[0])), sp0(&e0(ix[1])));
        join(g.m10(&a, &x), c.nu.apply2(&a, &x) + r.l1(&a, &u) + r.r0m(&m, &x))
    });
    let l3 = Tensor::from_fn(&[nn0, nn0, nn0], nn1, |ix| {
        let ((x, u), (y, v), (z, w)) = (sp0(&e0(ix[0])), sp0(&e0(ix[1])), sp0(&e0(ix[2])));
        join(g.l3(&x, &y, &z), c.theta.apply3(&x, &y, &z) + r.tl(&x, &y, &w) + r.tm(&x, &v, &z) + r.tr(&u, &y, &z))
    });
    let total = TwoTermAlgebra::new(TwoTermComplex { diff }, l2_00, l2_01, l2_10, l3)?;
    let proj = |n: usize, nn: usize| {
        Tensor::from_fn(&[nn], n, |ix| if ix[0] < n { Vector::unit(n, ix[0]) } else { Vector::zeros(n) })
    };
    let sect = |n: usize, nn: usize| Tensor::from_fn(&[n], nn, |ix| Vector::unit(nn, ix[0]));
    let e = Extension2 {
        total,
        base: g.clone(),
        sub0: (n0..nn0).collect(),
        sub1: (n1..nn1).collect(),
        p0: proj(n0, nn0),
        p1: proj(n1, nn1),
        s0: sect(n0, nn0),
        s1: sect(n1, nn1),
    };
    e.validate()?;
    Ok(e)
}

/// Result of comparing two extensions of the same `g` by the same `h`.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Equivalence {
    /// `witness = (λ0, λ1, λ2)` solves `c1 − c2 = D1(λ)`; `map` is the
    /// induced homomorphism `ĝ → ĝ'`, already verified.
    Equivalent { witness: Cochain1, map: Homomorphism2 },
    /// `c1 − c2` is not a coboundary: appending it to `d1` raises the rank.
    Inequivalent { rank_d1: usize, rank_with_difference: usize },
}

/// Decide whether two extensions are equivalent, with a verified witness in
/// one direction and a rank certificate in the other.
pub fn check_equivalence(e1: &Extension2, e2: &Extension2) -> Result<Equivalence> {
    e1.validate()?;
    e2.validate()?;
    if e1.base != e2.base {
        return Err(Error::RepresentationMismatch("the extensions have different base algebras".into()));
    }
    let r1 = extract_representation(e1)?;
    let r2 = extract_representation(e2)?;
    if r1 != r2 {
        return Err(Error::RepresentationMismatch("induced representations differ".into()));
    }
    let g = &e1.base;
    let diff = extract_cocycle(e1)?.sub(&extract_cocycle(e2)?);
    let mats = assemble_matrices(g, &r1)?;
    let target = diff.flatten();
    let Some(sol) = mats.d1.solve(&target) else {
        let rank_d1 = mats.d1.rank();
        let aug = mats.d1.hstack(&RationalMatrix::from_columns(target.len(), &[target]));
        return Ok(Equivalence::Inequivalent { rank_d1, rank_with_difference: aug.rank() });
    };
    let witness = Cochain1::from_flat(mats.dims, &sol)?;
    let map = induced_homomorphism(e1, e2, &witness)?;
    verify_equivalence_map(e1, e2, &map)?;
    Ok(Equivalence::Equivalent { witness, map })
}

/// `F0(σ1x + i1u) = σ2x + j(λ0x + u)`, likewise `F1`, and
/// `F2(α, β) = j(λ2(pα, pβ))`.
pub fn induced_homomorphism(e1: &Extension2, e2: &Extension2, w: &Cochain1) -> Result<Homomorphism2> {
    let (t1, t2) = (&e1.total, &e2.total);
    let f0 = Tensor::from_fn(&[t1.dim0()], t2.dim0(), |ix| {
        let alpha = t1.e0(ix[0]);
        let x = e1.p0.apply1(&alpha);
        let hpart = e1.h0(&(alpha - e1.s0.apply1(&x))).expect("validated extension");
        e2.s0.apply1(&x) + e2.inc0(&(w.phi.apply1(&x) + hpart))
    });
    let f1 = Tensor::from_fn(&[t1.dim1()], t2.dim1(), |ix| {
        let beta = t1.e1(ix[0]);
        let a = e1.p1.apply1(&beta);
        let hpart = e1.h1(&(beta - e1.s1.apply1(&a))).expect("validated extension");
        e2.s1.apply1(&a) + e2.inc1(&(w.phi1.apply1(&a) + hpart))
    });
    let f2 = Tensor::from_fn(&[t1.dim0(), t1.dim0()], t2.dim1(), |ix| {
        let (x, y) = (e1.p0.at(&ix[..1]), e1.p0.at(&ix[1..]));
        e2.inc1(&w.chi.apply2(&x, &y))
    });
    Ok(Homomorphism2 { f0, f1, f2 })
}

/// `F` is a homomorphism, `F∘i = j`, `q∘F = p` and `F2(i(u), α) = 0`.
pub fn verify_equivalence_map(e1: &Extension2, e2: &Extension2, f: &Homomorphism2) -> Result<()> {
    require("equivalence map", &check_homomorphism(&e1.total, &e2.total, f)?)?;
    let (k0, k1) = e1.h_dims();
    for i in 0..k0 {
        let u = Vector::<Rational>::unit(k0, i);
        if f.f0.apply1(&e1.inc0(&u)) != e2.inc0(&u) {
            return Err(invalid("F0 does not restrict to the identity on h0"));
        }
        for a in 0..e1.total.dim0() {
            if !f.f2.apply2(&e1.inc0(&u), &e1.total.e0(a)).is_zero() {
                return Err(invalid("F2 does not vanish on i(h0) ⊗ ĝ0"));
            }
        }
    }
    for i in 0..k1 {
        let m = Vector::<Rational>::unit(k1, i);
        if f.f1.apply1(&e1.inc1(&m)) != e2.inc1(&m) {
            return Err(invalid("F1 does not restrict to the identity on h1"));
        }
    }
    if f.f0.compose(&e2.p0) != e1.p0 || f.f1.compose(&e2.p1) != e1.p1 {
        return Err(invalid("F does not commute with the projections"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom2::d1_apply;
    use crate::exactlin::rat;
    use crate::fixtures;
    use crate::rep2::adjoint_representation;

    fn fix_u_setup() -> (TwoTermAlgebra, Representation2) {
        let g = fixtures::fix_u();
        let r = adjoint_representation(&g);
        (g, r)
    }

    #[test]
    fn direct_sum_round_trip() {
        let g = fixtures::fix_u();
        let r = Representation2::trivial(&g, TwoTermComplex::zero(1, 1));
        let c = Cochain2::zero(CochainDims::of(&g, &r));
        let e = build_extension(&g, &r, &c).unwrap();
        assert_eq!(extract_representation(&e).unwrap(), r);
        assert!(extract_cocycle(&e).unwrap().is_zero());
    }

    #[test]
    fn adjoint_round_trip_with_coboundary() {
        let (g, r) = fix_u_setup();
        let phi = Cochain1 { phi: Tensor::identity(1), phi1: Tensor::identity(1), chi: Tensor::zeros(&[1, 1, 1]) };
        let c = d1_apply(&g, &r, &phi).unwrap();
        let e = build_extension(&g, &r, &c).unwrap();
        assert!(check_algebra(&e.total).unwrap().passed());
        assert_eq!(extract_representation(&e).unwrap(), r);
        assert_eq!(extract_cocycle(&e).unwrap(), c);
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let (g, r) = fix_u_setup();
        let mut c = Cochain2::zero(CochainDims::of(&g, &r));
        c.omega.set(&[0, 0, 0], rat(1));
        assert!(matches!(build_extension(&g, &r, &c), Err(Error::NotCocycle(_))));
    }

    #[test]
    fn other_splitting_same_representation() {
        let (g, r) = fix_u_setup();
        let c = Cochain2::zero(CochainDims::of(&g, &r));
        let e = build_extension(&g, &r, &c).unwrap();
        // σ'(x) = σ(x) + 3·i(x), σ'(a) = σ(a) − i(a)
        let s0 = Tensor::from_data(&[1, 2], vec![rat(1), rat(3)]);
        let s1 = Tensor::from_data(&[1, 2], vec![rat(1), rat(-1)]);
        let e2 = e.with_splitting(s0, s1).unwrap();
        assert_eq!(extract_representation(&e2).unwrap(), r);
        let c2 = extract_cocycle(&e2).unwrap();
        assert!(d2_residual(&g, &r, &c2).unwrap().is_zero());
        match check_equivalence(&e, &e2).unwrap() {
            Equivalence::Equivalent { .. } => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fix_z_inequivalent_pair() {
        let g = fixtures::fix_z();
        let r = Representation2::trivial(&g, TwoTermComplex::zero(1, 1));
        let dims = CochainDims::of(&g, &r);
        let e1 = build_extension(&g, &r, &Cochain2::zero(dims)).unwrap();
        let mut c = Cochain2::zero(dims);
        c.psi.set(&[0, 0], rat(1));
        let e2 = build_extension(&g, &r, &c).unwrap();
        assert_eq!(
            check_equivalence(&e1, &e2).unwrap(),
            Equivalence::Inequivalent { rank_d1: 0, rank_with_difference: 1 }
        );
        assert!(matches!(check_equivalence(&e1, &e1).unwrap(), Equivalence::Equivalent { .. }));
    }
}
