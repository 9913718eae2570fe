//! Seeded generators for property tests and the `random` CLI verb. Entries
//! are small integers with an occasional fraction, so exact arithmetic stays
//! cheap while still exercising denominators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra2::{pull_back, TwoTermAlgebra};
use crate::cohom2::{Cochain1, Cochain2, CochainDims, SecondCohomology};
use crate::error::Result;
use crate::exactlin::{ratio, Rational};
use crate::tensor::Tensor;
use crate::xmod::{XCochain1, XCochain2, XCochainDims, XSecondCohomology};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `[-3, 3]`, or with probability 1/5 a fraction with
/// denominator 2 or 3.
pub fn small_rational(rng: &mut Rng64) -> Rational {
    let n = rng.gen_range(-3..=3);
    if rng.gen_bool(0.2) {
        ratio(n, rng.gen_range(2..=3))
    } else {
        ratio(n, 1)
    }
}

/// Every entry drawn with [`small_rational`] with probability `density`,
/// zero otherwise.
pub fn tensor(rng: &mut Rng64, shape: &[usize], density: f64) -> Tensor {
    let len = shape.iter().product();
    let data = (0..len).map(|_| if rng.gen_bool(density) { small_rational(rng) } else { ratio(0, 1) }).collect();
    Tensor::from_data(shape, data)
}

pub fn cochain1(rng: &mut Rng64, d: CochainDims) -> Cochain1 {
    let s = Cochain1::shapes(d);
    Cochain1 { phi: tensor(rng, &s[0], 0.7), phi1: tensor(rng, &s[1], 0.7), chi: tensor(rng, &s[2], 0.7) }
}

pub fn cochain2(rng: &mut Rng64, d: CochainDims, density: f64) -> Cochain2 {
    let s = Cochain2::shapes(d);
    let mut t = s.iter().map(|sh| tensor(rng, sh, density));
    let mut next = || t.next().unwrap();
    Cochain2 { psi: next(), omega: next(), mu: next(), nu: next(), theta: next() }
}

pub fn xcochain1(rng: &mut Rng64, d: XCochainDims) -> XCochain1 {
    XCochain1 { n0: tensor(rng, &[d.p, d.w], 0.7), n1: tensor(rng, &[d.h, d.v], 0.7) }
}

pub fn xcochain2(rng: &mut Rng64, d: XCochainDims, density: f64) -> XCochain2 {
    let s = XCochain2::shapes(d);
    let mut t = s.iter().map(|sh| tensor(rng, sh, density));
    let mut next = || t.next().unwrap();
    XCochain2 { psi: next(), omega: next(), mu: next(), nu: next() }
}

fn combination(rng: &mut Rng64, basis: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = vec![ratio(0, 1); len];
    for b in basis {
        let c = small_rational(rng);
        for (o, x) in out.iter_mut().zip(b) {
            *o += &c * x;
        }
    }
    out
}

/// A random element of `Z²`.
pub fn cocycle(rng: &mut Rng64, h: &SecondCohomology) -> Cochain2 {
    let flat = combination(rng, h.z2.basis(), h.dims.c2());
    Cochain2::from_flat(h.dims, &flat).expect("Z² vectors have cochain length")
}

pub fn xcocycle(rng: &mut Rng64, h: &XSecondCohomology) -> XCochain2 {
    let flat = combination(rng, h.z2.basis(), h.dims.c2());
    XCochain2::from_flat(h.dims, &flat).expect("Z² vectors have cochain length")
}

/// An invertible `n × n` map: a product of unit lower and upper triangular
/// factors with small entries.
pub fn invertible(rng: &mut Rng64, n: usize) -> Tensor {
    let mut lower = Tensor::identity(n);
    let mut upper = Tensor::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(&[i, j], ratio(rng.gen_range(-2..=2), 1));
            upper.set(&[j, i], ratio(rng.gen_range(-2..=2), 1));
        }
    }
    lower.compose(&upper)
}

/// `g` transported along a random isomorphism `(F0, F1, F2)` with `F2`
/// dense; returns the new structure and the isomorphism into `g`.
pub fn isomorph(rng: &mut Rng64, g: &TwoTermAlgebra) -> Result<(TwoTermAlgebra, [Tensor; 3])> {
    let (n0, n1) = (g.dim0(), g.dim1());
    let f0 = invertible(rng, n0);
    let f1 = invertible(rng, n1);
    let f2 = tensor(rng, &[n0, n0, n1], 0.5);
    let h = pull_back(g, &f0, &f1, &f2)?;
    Ok((h, [f0, f1, f2]))
}
