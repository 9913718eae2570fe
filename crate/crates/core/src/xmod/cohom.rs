//! Degree ≤ 2 cochains of a crossed module with coefficients in a
//! representation `(V, W, φ)`.
//!
//! Flattening order: `[N0 | N1]` and `[ψ | ω | μ | ν]`.

use super::{check_xmod_representation, CrossedModule, XModRepresentation};
use crate::cohom2::{cohomology_spaces, Residual, ResidualFamily};
use crate::error::{expect_shape, require, shape_err, Result};
use crate::exactlin::{Rational, RationalMatrix, Subspace};
use crate::tensor::{Tensor, Vector};

/// `(dim 𝔭, dim 𝔥, dim W, dim V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XCochainDims {
    pub p: usize,
    pub h: usize,
    pub w: usize,
    pub v: usize,
}

impl XCochainDims {
    pub fn of(x: &CrossedModule, r: &XModRepresentation) -> Self {
        XCochainDims { p: x.dim_p(), h: x.dim_h(), w: r.dim_w(), v: r.dim_v() }
    }

    pub fn c1(&self) -> usize {
        self.p * self.w + self.h * self.v
    }

    pub fn c2(&self) -> usize {
        let XCochainDims { p, h, w, v } = *self;
        h * w + p * p * w + 2 * p * h * v
    }

    pub fn residual(&self) -> usize {
        residual_shapes(*self).iter().map(|(_, _, s)| s.iter().product::<usize>()).sum()
    }
}

/// `(N0: 𝔭 → W, N1: 𝔥 → V)`.
#[derive(Clone, Debug, PartialEq)]
pub struct XCochain1 {
    pub n0: Tensor,
    pub n1: Tensor,
}

/// `(ψ: 𝔥 → W, ω: 𝔭⊗𝔭 → W, μ: 𝔭⊗𝔥 → V, ν: 𝔥⊗𝔭 → V)`.
#[derive(Clone, Debug, PartialEq)]
pub struct XCochain2 {
    pub psi: Tensor,
    pub omega: Tensor,
    pub mu: Tensor,
    pub nu: Tensor,
}

fn split(flat: &[Rational], shapes: &[Vec<usize>]) -> Result<Vec<Tensor>> {
    let total: usize = shapes.iter().map(|s| s.iter().product::<usize>()).sum();
    if flat.len() != total {
        return Err(shape_err(format!("flat cochain has length {}, expected {total}", flat.len())));
    }
    let mut off = 0;
    Ok(shapes
        .iter()
        .map(|s| {
            let len: usize = s.iter().product();
            off += len;
            Tensor::from_data(s, flat[off - len..off].to_vec())
        })
        .collect())
}

impl XCochain1 {
    pub fn shapes(d: XCochainDims) -> Vec<Vec<usize>> {
        vec![vec![d.p, d.w], vec![d.h, d.v]]
    }

    pub fn zero(d: XCochainDims) -> Self {
        XCochain1 { n0: Tensor::zeros(&[d.p, d.w]), n1: Tensor::zeros(&[d.h, d.v]) }
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.n0.data().iter().chain(self.n1.data()).cloned().collect()
    }

    pub fn from_flat(d: XCochainDims, flat: &[Rational]) -> Result<Self> {
        let mut t = split(flat, &Self::shapes(d))?.into_iter();
        Ok(XCochain1 { n0: t.next().unwrap(), n1: t.next().unwrap() })
    }

    pub fn check_shapes(&self, d: XCochainDims) -> Result<()> {
        let s = Self::shapes(d);
        expect_shape("N0", self.n0.shape(), &s[0])?;
        expect_shape("N1", self.n1.shape(), &s[1])
    }

    pub fn is_zero(&self) -> bool {
        self.n0.is_zero() && self.n1.is_zero()
    }
}

impl XCochain2 {
    pub fn shapes(d: XCochainDims) -> Vec<Vec<usize>> {
        let XCochainDims { p, h, w, v } = d;
        vec![vec![h, w], vec![p, p, w], vec![p, h, v], vec![h, p, v]]
    }

    pub fn zero(d: XCochainDims) -> Self {
        let z = |s: &Vec<usize>| Tensor::zeros(s);
        let s = Self::shapes(d);
        XCochain2 { psi: z(&s[0]), omega: z(&s[1]), mu: z(&s[2]), nu: z(&s[3]) }
    }

    pub fn parts(&self) -> [&Tensor; 4] {
        [&self.psi, &self.omega, &self.mu, &self.nu]
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.parts().iter().flat_map(|t| t.data().iter().cloned()).collect()
    }

    pub fn from_flat(d: XCochainDims, flat: &[Rational]) -> Result<Self> {
        let mut t = split(flat, &Self::shapes(d))?.into_iter();
        let mut next = || t.next().unwrap();
        Ok(XCochain2 { psi: next(), omega: next(), mu: next(), nu: next() })
    }

    pub fn check_shapes(&self, d: XCochainDims) -> Result<()> {
        for ((name, t), want) in ["psi", "omega", "mu", "nu"].iter().zip(self.parts()).zip(&Self::shapes(d)) {
            expect_shape(name, t.shape(), want)?;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.parts().iter().all(|t| t.is_zero())
    }

    pub fn add(&self, o: &XCochain2) -> XCochain2 {
        XCochain2 {
            psi: self.psi.add(&o.psi),
            omega: self.omega.add(&o.omega),
            mu: self.mu.add(&o.mu),
            nu: self.nu.add(&o.nu),
        }
    }

    pub fn sub(&self, o: &XCochain2) -> XCochain2 {
        XCochain2 {
            psi: self.psi.sub(&o.psi),
            omega: self.omega.sub(&o.omega),
            mu: self.mu.sub(&o.mu),
            nu: self.nu.sub(&o.nu),
        }
    }

    pub fn scale(&self, c: &Rational) -> XCochain2 {
        XCochain2 { psi: self.psi.scale(c), omega: self.omega.scale(c), mu: self.mu.scale(c), nu: self.nu.scale(c) }
    }
}

fn check_inputs(x: &CrossedModule, r: &XModRepresentation) -> Result<XCochainDims> {
    x.check_shapes()?;
    r.check_shapes(x)?;
    Ok(XCochainDims::of(x, r))
}

/// `D1(N0, N1) = (ψ, ω, μ, ν)` with
///
/// * ψ(a) = φN1(a) − N0(f(a))
/// * ω(x,y) = N0(x)·y + x·N0(y) − N0(xy)
/// * μ(x,a) = N0(x)⊲a + x·N1(a) − N1(x·a)
/// * ν(a,x) = N1(a)·x + a⊳N0(x) − N1(a·x)
pub fn xmod_d1(x: &CrossedModule, r: &XModRepresentation, n: &XCochain1) -> Result<XCochain2> {
    let d = check_inputs(x, r)?;
    n.check_shapes(d)?;
    let n0 = |v: &[Rational]| n.n0.apply1(v);
    let n1 = |v: &[Rational]| n.n1.apply1(v);
    let psi = Tensor::from_fn(&[d.h], d.w, |t| {
        let a = x.eh(t[0]);
        r.phi(&n1(&a)) - n0(&x.f(&a))
    });
    let omega = Tensor::from_fn(&[d.p, d.p], d.w, |t| {
        let (u, y) = (x.ep(t[0]), x.ep(t[1]));
        r.wx(&n0(&u), &y) + r.xw(&u, &n0(&y)) - n0(&x.mul(&u, &y))
    });
    let mu = Tensor::from_fn(&[d.p, d.h], d.v, |t| {
        let (u, a) = (x.ep(t[0]), x.eh(t[1]));
        r.wa(&n0(&u), &a) + r.xv(&u, &n1(&a)) - n1(&x.xa(&u, &a))
    });
    let nu = Tensor::from_fn(&[d.h, d.p], d.v, |t| {
        let (a, u) = (x.eh(t[0]), x.ep(t[1]));
        r.vx(&n1(&a), &u) + r.aw(&a, &n0(&u)) - n1(&x.ax(&a, &u))
    });
    Ok(XCochain2 { psi, omega, mu, nu })
}

fn residual_shapes(d: XCochainDims) -> Vec<(&'static str, &'static str, Vec<usize>)> {
    let XCochainDims { p, h, w, v } = d;
    vec![
        ("xc1", "(x,a)", vec![p, h, w]),
        ("xc2", "(a,x)", vec![h, p, w]),
        ("xc3", "(a,b)", vec![h, h, v]),
        ("xc4", "(x,y,z)", vec![p, p, p, w]),
        ("xc5", "(x,y,a)", vec![p, p, h, v]),
        ("xc6", "(a,x,y)", vec![h, p, p, v]),
        ("xc7", "(x,a,y)", vec![p, h, p, v]),
    ]
}

/// The seven 2-cocycle families, each tabulated as `left − right` on basis
/// tuples:
///
/// * `xc1` ψ(x·a) + φμ(x,a) − x·ψ(a) − ω(x,f(a))
/// * `xc2` ψ(a·x) + φν(a,x) − ω(f(a),x) − ψ(a)·x
/// * `xc3` ψ(a)⊲b + μ(f(a),b) − a⊳ψ(b) − ν(a,f(b))
/// * `xc4` ω(xy,z) + ω(x,y)·z − ω(x,yz) − x·ω(y,z)
/// * `xc5` μ(xy,a) + ω(x,y)⊲a − μ(x,y·a) − x·μ(y,a)
/// * `xc6` ν(a,xy) + a⊳ω(x,y) − ν(a·x,y) − ν(a,x)·y
/// * `xc7` ν(x·a,y) + μ(x,a)·y − μ(x,a·y) − x·ν(a,y)
pub fn xmod_d2_residual(x: &CrossedModule, r: &XModRepresentation, c: &XCochain2) -> Result<Residual> {
    let d = check_inputs(x, r)?;
    c.check_shapes(d)?;
    let psi = |a: &[Rational]| c.psi.apply1(a);
    let om = |u: &[Rational], y: &[Rational]| c.omega.apply2(u, y);
    let mu = |u: &[Rational], a: &[Rational]| c.mu.apply2(u, a);
    let nu = |a: &[Rational], u: &[Rational]| c.nu.apply2(a, u);
    let (xp, ah) = (|i| x.ep(i), |i| x.eh(i));
    let mut families = Vec::new();
    for (id, args, shape) in residual_shapes(d) {
        let (ins, out) = shape.split_at(shape.len() - 1);
        let values = Tensor::from_fn(ins, out[0], |t| -> Vector {
            match id {
                "xc1" => {
                    let (u, a) = (xp(t[0]), ah(t[1]));
                    psi(&x.xa(&u, &a)) + r.phi(&mu(&u, &a)) - r.xw(&u, &psi(&a)) - om(&u, &x.f(&a))
                }
                "xc2" => {
                    let (a, u) = (ah(t[0]), xp(t[1]));
                    psi(&x.ax(&a, &u)) + r.phi(&nu(&a, &u)) - om(&x.f(&a), &u) - r.wx(&psi(&a), &u)
                }
                "xc3" => {
                    let (a, b) = (ah(t[0]), ah(t[1]));
                    r.wa(&psi(&a), &b) + mu(&x.f(&a), &b) - r.aw(&a, &psi(&b)) - nu(&a, &x.f(&b))
                }
                "xc4" => {
                    let (u, y, z) = (xp(t[0]), xp(t[1]), xp(t[2]));
                    om(&x.mul(&u, &y), &z) + r.wx(&om(&u, &y), &z) - om(&u, &x.mul(&y, &z)) - r.xw(&u, &om(&y, &z))
                }
                "xc5" => {
                    let (u, y, a) = (xp(t[0]), xp(t[1]), ah(t[2]));
                    mu(&x.mul(&u, &y), &a) + r.wa(&om(&u, &y), &a) - mu(&u, &x.xa(&y, &a)) - r.xv(&u, &mu(&y, &a))
                }
                "xc6" => {
                    let (a, u, y) = (ah(t[0]), xp(t[1]), xp(t[2]));
                    nu(&a, &x.mul(&u, &y)) + r.aw(&a, &om(&u, &y)) - nu(&x.ax(&a, &u), &y) - r.vx(&nu(&a, &u), &y)
                }
                _ => {
                    let (u, a, y) = (xp(t[0]), ah(t[1]), xp(t[2]));
                    nu(&x.xa(&u, &a), &y) + r.vx(&mu(&u, &a), &y) - mu(&u, &x.ax(&a, &y)) - r.xv(&u, &nu(&a, &y))
                }
            }
        });
        families.push(ResidualFamily { id, args, values });
    }
    Ok(Residual { families })
}

/// `d1` and `d2` as matrices in the flattening order.
#[derive(Clone, Debug, PartialEq)]
pub struct XCoboundaryMatrices {
    pub dims: XCochainDims,
    pub d1: RationalMatrix,
    pub d2: RationalMatrix,
}

pub fn xmod_assemble(x: &CrossedModule, r: &XModRepresentation) -> Result<XCoboundaryMatrices> {
    require("representation", &check_xmod_representation(x, r)?)?;
    let dims = XCochainDims::of(x, r);
    let (c1, c2) = (dims.c1(), dims.c2());
    let cols1 = (0..c1)
        .map(|i| Ok(xmod_d1(x, r, &XCochain1::from_flat(dims, &Vector::<Rational>::unit(c1, i))?)?.flatten()))
        .collect::<Result<Vec<_>>>()?;
    let cols2 = (0..c2)
        .map(|i| Ok(xmod_d2_residual(x, r, &XCochain2::from_flat(dims, &Vector::<Rational>::unit(c2, i))?)?.flatten()))
        .collect::<Result<Vec<_>>>()?;
    Ok(XCoboundaryMatrices {
        dims,
        d1: RationalMatrix::from_columns(c2, &cols1),
        d2: RationalMatrix::from_columns(dims.residual(), &cols2),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct XSecondCohomology {
    pub dims: XCochainDims,
    pub z2: Subspace,
    pub b2: Subspace,
    pub representatives: Vec<XCochain2>,
}

impl XSecondCohomology {
    pub fn dim_z2(&self) -> usize {
        self.z2.dim()
    }
    pub fn dim_b2(&self) -> usize {
        self.b2.dim()
    }
    pub fn dim_h2(&self) -> usize {
        self.representatives.len()
    }
}

pub fn xmod_h2(x: &CrossedModule, r: &XModRepresentation) -> Result<XSecondCohomology> {
    let m = xmod_assemble(x, r)?;
    let (z2, b2, reps) = cohomology_spaces(&m.d1, &m.d2)?;
    let representatives = reps.iter().map(|v| XCochain2::from_flat(m.dims, v)).collect::<Result<Vec<_>>>()?;
    Ok(XSecondCohomology { dims: m.dims, z2, b2, representatives })
}

/// A preimage under `D1` when `c` is a coboundary.
pub fn xmod_is_coboundary(x: &CrossedModule, r: &XModRepresentation, c: &XCochain2) -> Result<Option<XCochain1>> {
    let m = xmod_assemble(x, r)?;
    c.check_shapes(m.dims)?;
    m.d1.solve(&c.flatten()).map(|s| XCochain1::from_flat(m.dims, &s)).transpose()
}
