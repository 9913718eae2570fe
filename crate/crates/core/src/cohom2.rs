//! The low-degree cochain complex of an associative 2-algebra with
//! coefficients in a representation: explicit `D1`, the 2-cocycle residual
//! `D2`, their matrices, and `Z²`, `B²`, `H²`.
//!
//! Flattening order: a 1-cochain is `[φ | φ1 | χ]` and a 2-cochain is
//! `[ψ | ω | μ | ν | θ]`, each block in lexicographic order of its input
//! indices followed by the output index (the tensor storage order).

use crate::algebra2::{check_algebra, TwoTermAlgebra};
use crate::error::{expect_shape, require, shape_err, Error, Result};
use crate::exactlin::{Rational, RationalMatrix, Subspace};
use crate::rep2::{check_representation, Representation2};
use crate::tensor::{Tensor, Vector};

/// Dimensions `(n0, n1)` of the algebra and `(m0, m1)` of the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CochainDims {
    pub n0: usize,
    pub n1: usize,
    pub m0: usize,
    pub m1: usize,
}

impl CochainDims {
    pub fn of(g: &TwoTermAlgebra, r: &Representation2) -> Self {
        CochainDims { n0: g.dim0(), n1: g.dim1(), m0: r.dim0(), m1: r.dim1() }
    }

    pub fn c1(&self) -> usize {
        let CochainDims { n0, n1, m0, m1 } = *self;
        n0 * m0 + n1 * m1 + n0 * n0 * m1
    }

    pub fn c2(&self) -> usize {
        let CochainDims { n0, n1, m0, m1 } = *self;
        n1 * m0 + n0 * n0 * m0 + 2 * n0 * n1 * m1 + n0 * n0 * n0 * m1
    }

    /// Length of the flattened 2-cocycle residual.
    pub fn residual(&self) -> usize {
        residual_shapes(*self).iter().map(|(_, _, s)| s.iter().product::<usize>()).sum()
    }
}

/// `(φ, φ1, χ)`: `φ: g0 → V0`, `φ1: g1 → V1`, `χ: g0⊗g0 → V1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain1 {
    pub phi: Tensor,
    pub phi1: Tensor,
    pub chi: Tensor,
}

/// `(ψ, ω, μ, ν, θ)`: `ψ: g1 → V0`, `ω: g0⊗g0 → V0`, `μ: g0⊗g1 → V1`,
/// `ν: g1⊗g0 → V1`, `θ: g0⊗g0⊗g0 → V1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain2 {
    pub psi: Tensor,
    pub omega: Tensor,
    pub mu: Tensor,
    pub nu: Tensor,
    pub theta: Tensor,
}

fn split_flat(flat: &[Rational], shapes: &[Vec<usize>]) -> Result<Vec<Tensor>> {
    let total: usize = shapes.iter().map(|s| s.iter().product::<usize>()).sum();
    if flat.len() != total {
        return Err(shape_err(format!("flat cochain has length {}, expected {total}", flat.len())));
    }
    let mut out = Vec::new();
    let mut off = 0;
    for s in shapes {
        let len: usize = s.iter().product();
        out.push(Tensor::from_data(s, flat[off..off + len].to_vec()));
        off += len;
    }
    Ok(out)
}

impl Cochain1 {
    pub fn shapes(d: CochainDims) -> Vec<Vec<usize>> {
        vec![vec![d.n0, d.m0], vec![d.n1, d.m1], vec![d.n0, d.n0, d.m1]]
    }

    pub fn zero(d: CochainDims) -> Self {
        let [phi, phi1, chi] = Self::shapes(d).map_to_tensors();
        Cochain1 { phi, phi1, chi }
    }

    pub fn flatten(&self) -> Vec<Rational> {
        [&self.phi, &self.phi1, &self.chi].iter().flat_map(|t| t.data().iter().cloned()).collect()
    }

    pub fn from_flat(d: CochainDims, flat: &[Rational]) -> Result<Self> {
        let mut t = split_flat(flat, &Self::shapes(d))?.into_iter();
        Ok(Cochain1 { phi: t.next().unwrap(), phi1: t.next().unwrap(), chi: t.next().unwrap() })
    }

    pub fn check_shapes(&self, d: CochainDims) -> Result<()> {
        let s = Self::shapes(d);
        expect_shape("phi", self.phi.shape(), &s[0])?;
        expect_shape("phi1", self.phi1.shape(), &s[1])?;
        expect_shape("chi", self.chi.shape(), &s[2])
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.phi1.is_zero() && self.chi.is_zero()
    }
}

impl Cochain2 {
    pub fn shapes(d: CochainDims) -> Vec<Vec<usize>> {
        let CochainDims { n0, n1, m0, m1 } = d;
        vec![vec![n1, m0], vec![n0, n0, m0], vec![n0, n1, m1], vec![n1, n0, m1], vec![n0, n0, n0, m1]]
    }

    pub fn zero(d: CochainDims) -> Self {
        let [psi, omega, mu, nu, theta] = Self::shapes(d).map_to_tensors();
        Cochain2 { psi, omega, mu, nu, theta }
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.parts().iter().flat_map(|t| t.data().iter().cloned()).collect()
    }

    pub fn from_flat(d: CochainDims, flat: &[Rational]) -> Result<Self> {
        let mut t = split_flat(flat, &Self::shapes(d))?.into_iter();
        let mut next = || t.next().unwrap();
        Ok(Cochain2 { psi: next(), omega: next(), mu: next(), nu: next(), theta: next() })
    }

    pub fn check_shapes(&self, d: CochainDims) -> Result<()> {
        let s = Self::shapes(d);
        for ((name, t), want) in ["psi", "omega", "mu", "nu", "theta"].iter().zip(self.parts()).zip(&s) {
            expect_shape(name, t.shape(), want)?;
        }
        Ok(())
    }

    pub fn parts(&self) -> [&Tensor; 5] {
        [&self.psi, &self.omega, &self.mu, &self.nu, &self.theta]
    }

    pub fn is_zero(&self) -> bool {
        self.parts().iter().all(|t| t.is_zero())
    }

    pub fn add(&self, o: &Cochain2) -> Cochain2 {
        Cochain2 {
            psi: self.psi.add(&o.psi),
            omega: self.omega.add(&o.omega),
            mu: self.mu.add(&o.mu),
            nu: self.nu.add(&o.nu),
            theta: self.theta.add(&o.theta),
        }
    }

    pub fn sub(&self, o: &Cochain2) -> Cochain2 {
        self.add(&o.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Cochain2 {
        Cochain2 {
            psi: self.psi.scale(c),
            omega: self.omega.scale(c),
            mu: self.mu.scale(c),
            nu: self.nu.scale(c),
            theta: self.theta.scale(c),
        }
    }
}

trait MapToTensors<const N: usize> {
    fn map_to_tensors(self) -> [Tensor; N];
}

impl<const N: usize> MapToTensors<N> for Vec<Vec<usize>> {
    fn map_to_tensors(self) -> [Tensor; N] {
        let v: Vec<Tensor> = self.iter().map(|s| Tensor::zeros(s)).collect();
        v.try_into().expect("shape count")
    }
}

/// `D1(φ, φ1, χ) = (ψ, ω, μ, ν, θ)` with
///
/// * ψ(a) = ∂φ1(a) − φ(da)
/// * ω(x,y) = x⊳φ(y) + φ(x)⊲y − φ(xy) + ∂χ(x,y)
/// * μ(x,a) = x⊳φ1(a) + φ(x)⊲a − φ1(xa) + χ(x,da)
/// * ν(a,x) = a⊳φ(x) + φ1(a)⊲x − φ1(ax) + χ(da,x)
/// * θ(x,y,z) = χ(x,y)⊲z − x⊳χ(y,z) + χ(xy,z) − χ(x,yz) − φ1(l3(x,y,z))
///   + (x,y)⊳φ(z) + x⊳φ(y)⊲z + φ(x)⊲(y,z)
///
/// Shapes are validated; the axioms of `g` and `r` are the caller's
/// responsibility (see [`assemble_matrices`]).
pub fn d1_apply(g: &TwoTermAlgebra, r: &Representation2, c: &Cochain1) -> Result<Cochain2> {
    g.check_shapes()?;
    r.check_shapes(g)?;
    let dims = CochainDims::of(g, r);
    c.check_shapes(dims)?;
    let CochainDims { n0, n1, m0, m1 } = dims;
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let phi = |v: &[Rational]| c.phi.apply1(v);
    let phi1 = |v: &[Rational]| c.phi1.apply1(v);
    let chi = |u: &[Rational], v: &[Rational]| c.chi.apply2(u, v);

    let psi = Tensor::from_fn(&[n1], m0, |t| {
        let a = a(t[0]);
        r.del(&phi1(&a)) - phi(&g.d(&a))
    });
    let omega = Tensor::from_fn(&[n0, n0], m0, |t| {
        let (x, y) = (x(t[0]), x(t[1]));
        r.l0(&x, &phi(&y)) + r.r0(&phi(&x), &y) - phi(&g.m00(&x, &y)) + r.del(&chi(&x, &y))
    });
    let mu = Tensor::from_fn(&[n0, n1], m1, |t| {
        let (x, a) = (x(t[0]), a(t[1]));
        r.l0m(&x, &phi1(&a)) + r.r1(&phi(&x), &a) - phi1(&g.m01(&x, &a)) + chi(&x, &g.d(&a))
    });
    let nu = Tensor::from_fn(&[n1, n0], m1, |t| {
        let (a, x) = (a(t[0]), x(t[1]));
        r.l1(&a, &phi(&x)) + r.r0m(&phi1(&a), &x) - phi1(&g.m10(&a, &x)) + chi(&g.d(&a), &x)
    });
    let theta = Tensor::from_fn(&[n0, n0, n0], m1, |t| {
        let (x, y, z) = (x(t[0]), x(t[1]), x(t[2]));
        r.r0m(&chi(&x, &y), &z) - r.l0m(&x, &chi(&y, &z)) + chi(&g.m00(&x, &y), &z)
            - chi(&x, &g.m00(&y, &z))
            - phi1(&g.l3(&x, &y, &z))
            + r.tl(&x, &y, &phi(&z))
            + r.tm(&x, &phi(&y), &z)
            + r.tr(&phi(&x), &y, &z)
    });
    Ok(Cochain2 { psi, omega, mu, nu, theta })
}

/// One family of the 2-cocycle residual, tabulated on basis tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualFamily {
    pub id: &'static str,
    pub args: &'static str,
    pub values: Tensor,
}

/// The eight 2-cocycle equation families evaluated on all basis tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub families: Vec<ResidualFamily>,
}

impl Residual {
    pub fn flatten(&self) -> Vec<Rational> {
        self.families.iter().flat_map(|f| f.values.data().iter().cloned()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.families.iter().all(|f| f.values.is_zero())
    }

    /// Ids of families with a nonzero entry.
    pub fn nonzero(&self) -> Vec<&'static str> {
        self.families.iter().filter(|f| !f.values.is_zero()).map(|f| f.id).collect()
    }
}

fn residual_shapes(d: CochainDims) -> Vec<(&'static str, &'static str, Vec<usize>)> {
    let CochainDims { n0, n1, m0, m1 } = d;
    vec![
        ("coc01", "(x,a)", vec![n0, n1, m0]),
        ("coc02", "(a,x)", vec![n1, n0, m0]),
        ("coc03", "(a,b)", vec![n1, n1, m1]),
        ("coc04", "(x,y,z)", vec![n0, n0, n0, m0]),
        ("coc05", "(x,y,a)", vec![n0, n0, n1, m1]),
        ("coc06", "(x,a,y)", vec![n0, n1, n0, m1]),
        ("coc07", "(a,x,y)", vec![n1, n0, n0, m1]),
        ("coc08", "(x,y,z,t)", vec![n0, n0, n0, n0, m1]),
    ]
}

/// The 2-cocycle residual of `c`; `c` is a cocycle exactly when every entry
/// vanishes. Each family is `left − right` of one equation:
///
/// * `coc01` x⊳ψ(a) − ψ(xa) + ω(x,da) − ∂μ(x,a)
/// * `coc02` ψ(a)⊲x − ψ(ax) + ω(da,x) − ∂ν(a,x)
/// * `coc03` a⊳ψ(b) + ν(a,db) − ψ(a)⊲b − μ(da,b)
/// * `coc04` ω(x,y)⊲z − x⊳ω(y,z) + ω(xy,z) − ω(x,yz) − ∂θ(x,y,z) − ψ(l3(x,y,z))
/// * `coc05` ω(x,y)⊲a − x⊳μ(y,a) + μ(xy,a) − μ(x,ya) − θ(x,y,da) − (x,y)⊳ψ(a)
/// * `coc06` μ(x,a)⊲y − x⊳ν(a,y) + ν(xa,y) − μ(x,ay) − θ(x,da,y) − x⊳ψ(a)⊲y
/// * `coc07` ν(a,x)⊲y − a⊳ω(x,y) + ν(ax,y) − ν(a,xy) − θ(da,x,y) − ψ(a)⊲(x,y)
/// * `coc08` x⊳θ(y,z,t) + θ(x,y,z)⊲t − θ(xy,z,t) + θ(x,yz,t) − θ(x,y,zt)
///   + μ(x,l3(y,z,t)) + ν(l3(x,y,z),t) − (x,y)⊳ω(z,t) − ω(x,y)⊲(z,t) + x⊳ω(y,z)⊲t
pub fn d2_residual(g: &TwoTermAlgebra, r: &Representation2, c: &Cochain2) -> Result<Residual> {
    g.check_shapes()?;
    r.check_shapes(g)?;
    let dims = CochainDims::of(g, r);
    c.check_shapes(dims)?;
    let x = |i| g.e0(i);
    let a = |i| g.e1(i);
    let psi = |v: &[Rational]| c.psi.apply1(v);
    let om = |u: &[Rational], v: &[Rational]| c.omega.apply2(u, v);
    let mu = |u: &[Rational], v: &[Rational]| c.mu.apply2(u, v);
    let nu = |u: &[Rational], v: &[Rational]| c.nu.apply2(u, v);
    let th = |u: &[Rational], v: &[Rational], w: &[Rational]| c.theta.apply3(u, v, w);
    let m = |u: &[Rational], v: &[Rational]| g.m00(u, v);

    let mut families = Vec::with_capacity(8);
    for (id, args, shape) in residual_shapes(dims) {
        let (ins, out) = shape.split_at(shape.len() - 1);
        let values = Tensor::from_fn(ins, out[0], |t| -> Vector {
            match id {
                "coc01" => {
                    let (x, a) = (x(t[0]), a(t[1]));
                    r.l0(&x, &psi(&a)) - psi(&g.m01(&x, &a)) + om(&x, &g.d(&a)) - r.del(&mu(&x, &a))
                }
                "coc02" => {
                    let (a, x) = (a(t[0]), x(t[1]));
                    r.r0(&psi(&a), &x) - psi(&g.m10(&a, &x)) + om(&g.d(&a), &x) - r.del(&nu(&a, &x))
                }
                "coc03" => {
                    let (a, b) = (a(t[0]), a(t[1]));
                    r.l1(&a, &psi(&b)) + nu(&a, &g.d(&b)) - r.r1(&psi(&a), &b) - mu(&g.d(&a), &b)
                }
                "coc04" => {
                    let (x, y, z) = (x(t[0]), x(t[1]), x(t[2]));
                    r.r0(&om(&x, &y), &z) - r.l0(&x, &om(&y, &z)) + om(&m(&x, &y), &z)
                        - om(&x, &m(&y, &z))
                        - r.del(&th(&x, &y, &z))
                        - psi(&g.l3(&x, &y, &z))
                }
                "coc05" => {
                    let (x, y, a) = (x(t[0]), x(t[1]), a(t[2]));
                    r.r1(&om(&x, &y), &a) - r.l0m(&x, &mu(&y, &a)) + mu(&m(&x, &y), &a)
                        - mu(&x, &g.m01(&y, &a))
                        - th(&x, &y, &g.d(&a))
                        - r.tl(&x, &y, &psi(&a))
                }
                "coc06" => {
                    let (x, a, y) = (x(t[0]), a(t[1]), x(t[2]));
                    r.r0m(&mu(&x, &a), &y) - r.l0m(&x, &nu(&a, &y)) + nu(&g.m01(&x, &a), &y)
                        - mu(&x, &g.m10(&a, &y))
                        - th(&x, &g.d(&a), &y)
                        - r.tm(&x, &psi(&a), &y)
                }
                "coc07" => {
                    let (a, x, y) = (a(t[0]), x(t[1]), x(t[2]));
                    r.r0m(&nu(&a, &x), &y) - r.l1(&a, &om(&x, &y)) + nu(&g.m10(&a, &x), &y)
                        - nu(&a, &m(&x, &y))
                        - th(&g.d(&a), &x, &y)
                        - r.tr(&psi(&a), &x, &y)
                }
                "coc08" => {
                    let (x, y, z, w) = (x(t[0]), x(t[1]), x(t[2]), x(t[3]));
                    r.l0m(&x, &th(&y, &z, &w)) + r.r0m(&th(&x, &y, &z), &w) - th(&m(&x, &y), &z, &w)
                        + th(&x, &m(&y, &z), &w)
                        - th(&x, &y, &m(&z, &w))
                        + mu(&x, &g.l3(&y, &z, &w))
                        + nu(&g.l3(&x, &y, &z), &w)
                        - r.tl(&x, &y, &om(&z, &w))
                        - r.tr(&om(&x, &y), &z, &w)
                        + r.tm(&x, &om(&y, &z), &w)
                }
                _ => unreachable!(),
            }
        });
        families.push(ResidualFamily { id, args, values });
    }
    Ok(Residual { families })
}

/// `d1` (C¹ → C²) and `d2` (C² → residual space) as matrices in the standard
/// flattening order.
#[derive(Clone, Debug, PartialEq)]
pub struct CoboundaryMatrices {
    pub dims: CochainDims,
    pub d1: RationalMatrix,
    pub d2: RationalMatrix,
}

/// Fail unless `g` passes its axioms and `r` is a representation of it.
pub fn verify_inputs(g: &TwoTermAlgebra, r: &Representation2) -> Result<()> {
    require("algebra", &check_algebra(g)?)?;
    require("representation", &check_representation(g, r)?)
}

pub fn assemble_matrices(g: &TwoTermAlgebra, r: &Representation2) -> Result<CoboundaryMatrices> {
    verify_inputs(g, r)?;
    let dims = CochainDims::of(g, r);
    let (c1, c2, res) = (dims.c1(), dims.c2(), dims.residual());
    let mut cols1 = Vec::with_capacity(c1);
    for i in 0..c1 {
        let basis = Cochain1::from_flat(dims, &Vector::<Rational>::unit(c1, i))?;
        cols1.push(d1_apply(g, r, &basis)?.flatten());
    }
    let mut cols2 = Vec::with_capacity(c2);
    for i in 0..c2 {
        let basis = Cochain2::from_flat(dims, &Vector::<Rational>::unit(c2, i))?;
        cols2.push(d2_residual(g, r, &basis)?.flatten());
    }
    Ok(CoboundaryMatrices {
        dims,
        d1: RationalMatrix::from_columns(c2, &cols1),
        d2: RationalMatrix::from_columns(res, &cols2),
    })
}

/// `Z²`, `B²` and a basis of cocycles whose classes form a basis of `H²`.
#[derive(Clone, Debug, PartialEq)]
pub struct SecondCohomology {
    pub dims: CochainDims,
    pub z2: Subspace,
    pub b2: Subspace,
    pub representatives: Vec<Cochain2>,
}

impl SecondCohomology {
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

pub fn second_cohomology(g: &TwoTermAlgebra, r: &Representation2) -> Result<SecondCohomology> {
    let mats = assemble_matrices(g, r)?;
    second_cohomology_from(&mats)
}

pub(crate) fn second_cohomology_from(mats: &CoboundaryMatrices) -> Result<SecondCohomology> {
    let (z2, b2, reps) = cohomology_spaces(&mats.d1, &mats.d2)?;
    let representatives = reps.iter().map(|v| Cochain2::from_flat(mats.dims, v)).collect::<Result<Vec<_>>>()?;
    Ok(SecondCohomology { dims: mats.dims, z2, b2, representatives })
}

/// `ker d2`, `im d1` and flat vectors completing a basis of `im d1` to one
/// of `ker d2`.
pub(crate) fn cohomology_spaces(
    d1: &RationalMatrix,
    d2: &RationalMatrix,
) -> Result<(Subspace, Subspace, Vec<Vec<Rational>>)> {
    let z2 = d2.kernel_basis();
    let b2 = d1.image_basis();
    if !b2.basis().iter().all(|v| z2.contains(v)) {
        return Err(Error::Unsupported("coboundaries are not cocycles for these inputs".into()));
    }
    let reps = b2.complement_in(z2.basis());
    Ok((z2, b2, reps))
}

/// Split `c` as `Σ coords[i]·reps[i] + d1(correction)`; `None` when `c` is
/// outside `span(reps) + im d1`.
pub(crate) fn reduce_flat(
    reps: &[Vec<Rational>],
    d1: &RationalMatrix,
    c: &[Rational],
) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let system = RationalMatrix::from_columns(d1.rows(), reps).hstack(d1);
    let sol = system.solve(c)?;
    let (coords, rest) = sol.split_at(reps.len());
    Some((coords.to_vec(), rest.to_vec()))
}

/// A preimage under `D1` when `c` is a coboundary.
pub fn is_coboundary(g: &TwoTermAlgebra, r: &Representation2, c: &Cochain2) -> Result<Option<Cochain1>> {
    let mats = assemble_matrices(g, r)?;
    c.check_shapes(mats.dims)?;
    match mats.d1.solve(&c.flatten()) {
        Some(x) => Ok(Some(Cochain1::from_flat(mats.dims, &x)?)),
        None => Ok(None),
    }
}

pub fn is_cocycle1(g: &TwoTermAlgebra, r: &Representation2, c: &Cochain1) -> Result<bool> {
    Ok(d1_apply(g, r, c)?.is_zero())
}

pub fn is_cocycle2(g: &TwoTermAlgebra, r: &Representation2, c: &Cochain2) -> Result<bool> {
    Ok(d2_residual(g, r, c)?.is_zero())
}

/// `c = Σ coords[i]·representatives[i] + D1(correction)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleReduction {
    pub coords: Vec<Rational>,
    pub representative: Cochain2,
    pub correction: Cochain1,
}

/// Express a cocycle in the `H²` basis of [`second_cohomology`] plus a
/// coboundary.
pub fn reduce_cocycle(g: &TwoTermAlgebra, r: &Representation2, c: &Cochain2) -> Result<CocycleReduction> {
    let mats = assemble_matrices(g, r)?;
    c.check_shapes(mats.dims)?;
    let res = d2_residual(g, r, c)?;
    if !res.is_zero() {
        return Err(Error::NotCocycle(res.nonzero().join(", ")));
    }
    let h2 = second_cohomology_from(&mats)?;
    let reps: Vec<Vec<Rational>> = h2.representatives.iter().map(Cochain2::flatten).collect();
    let (coords, rest) =
        reduce_flat(&reps, &mats.d1, &c.flatten()).expect("every cocycle is a class plus a coboundary");
    let mut representative = Cochain2::zero(mats.dims);
    for (ci, rep) in coords.iter().zip(&h2.representatives) {
        representative = representative.add(&rep.scale(ci));
    }
    let correction = Cochain1::from_flat(mats.dims, &rest)?;
    Ok(CocycleReduction { coords, representative, correction })
}
