//! Dense structure-constant tensors and the vectors they act on.
//!
//! Every multilinear map `U1 ⊗ … ⊗ Uk → W` is stored with its input indices
//! first and the output index last, row-major. A linear map `U → W` is the
//! rank-2 case `[dim U, dim W]`.

use std::ops::{Add, Deref, DerefMut, Neg, Sub};

use num::Zero;

use crate::exactlin::{Rational, RationalMatrix, Scalar};

/// Coordinate vector over `S`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector<S = Rational>(pub Vec<S>);

impl<S: Scalar> Vector<S> {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![S::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = S::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Vector(self.0.iter().map(|x| c.clone() * x.clone()).collect())
    }

    pub fn into_inner(self) -> Vec<S> {
        self.0
    }
}

impl<S> Deref for Vector<S> {
    type Target = [S];
    fn deref(&self) -> &[S] {
        &self.0
    }
}

impl<S> DerefMut for Vector<S> {
    fn deref_mut(&mut self) -> &mut [S] {
        &mut self.0
    }
}

impl<S: Scalar> Add for Vector<S> {
    type Output = Vector<S>;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.len(), rhs.len(), "vector lengths differ");
        Vector(self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<S: Scalar> Sub for Vector<S> {
    type Output = Vector<S>;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.len(), rhs.len(), "vector lengths differ");
        Vector(self.0.into_iter().zip(rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<S: Scalar> Neg for Vector<S> {
    type Output = Vector<S>;
    fn neg(self) -> Self {
        Vector(self.0.into_iter().map(|a| -a).collect())
    }
}

impl<S> From<Vec<S>> for Vector<S> {
    fn from(v: Vec<S>) -> Self {
        Vector(v)
    }
}

/// Call `f` on every index tuple of the box `dims`, in lexicographic order.
pub fn for_each_tuple(dims: &[usize], mut f: impl FnMut(&[usize])) {
    if dims.contains(&0) {
        return;
    }
    let mut idx = vec![0; dims.len()];
    loop {
        f(&idx);
        let mut k = dims.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Dense tensor, inputs first and output last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<S = Rational> {
    shape: Vec<usize>,
    data: Vec<S>,
}

impl<S: Scalar> Tensor<S> {
    pub fn zeros(shape: &[usize]) -> Self {
        assert!(!shape.is_empty(), "a tensor needs at least an output index");
        Tensor { shape: shape.to_vec(), data: vec![S::zero(); shape.iter().product()] }
    }

    pub fn from_data(shape: &[usize], data: Vec<S>) -> Self {
        assert_eq!(data.len(), shape.iter().product::<usize>(), "data length differs from shape");
        Tensor { shape: shape.to_vec(), data }
    }

    /// The identity map `[n, n]`.
    pub fn identity(n: usize) -> Self {
        let mut t = Self::zeros(&[n, n]);
        for i in 0..n {
            t.set(&[i, i], S::one());
        }
        t
    }

    /// Tabulate a multilinear map from its values on basis tuples.
    pub fn from_fn(in_dims: &[usize], out_dim: usize, mut f: impl FnMut(&[usize]) -> Vector<S>) -> Self {
        let mut shape = in_dims.to_vec();
        shape.push(out_dim);
        let mut data = Vec::with_capacity(shape.iter().product());
        for_each_tuple(in_dims, |idx| {
            let v = f(idx);
            assert_eq!(v.len(), out_dim, "value at {idx:?} has wrong length");
            data.extend(v.0);
        });
        Tensor { shape, data }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn into_data(self) -> Vec<S> {
        self.data
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.shape[..self.shape.len() - 1]
    }

    pub fn out_dim(&self) -> usize {
        *self.shape.last().unwrap()
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "index rank differs from tensor rank");
        let mut off = 0;
        for (&i, &d) in idx.iter().zip(&self.shape) {
            assert!(i < d, "index {idx:?} out of range for shape {:?}", self.shape);
            off = off * d + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: S) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    /// Output vector on a basis tuple of inputs.
    pub fn at(&self, inputs: &[usize]) -> Vector<S> {
        assert_eq!(inputs.len() + 1, self.shape.len(), "wrong number of inputs");
        let mut off = 0;
        for (&i, &d) in inputs.iter().zip(&self.shape) {
            assert!(i < d, "input index {inputs:?} out of range for shape {:?}", self.shape);
            off = off * d + i;
        }
        let n = self.out_dim();
        Vector(self.data[off * n..(off + 1) * n].to_vec())
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn apply(&self, args: &[&[S]]) -> Vector<S> {
        assert_eq!(args.len() + 1, self.shape.len(), "wrong number of arguments");
        for (k, a) in args.iter().enumerate() {
            assert_eq!(a.len(), self.shape[k], "argument {k} has wrong length");
        }
        let mut acc = Vector::zeros(self.out_dim());
        self.apply_rec(args, 0, 0, S::one(), &mut acc);
        acc
    }

    fn apply_rec(&self, args: &[&[S]], depth: usize, off: usize, coef: S, acc: &mut Vector<S>) {
        if depth == args.len() {
            let n = self.out_dim();
            for (k, v) in self.data[off * n..(off + 1) * n].iter().enumerate() {
                if !v.is_zero() {
                    let cur = std::mem::replace(&mut acc.0[k], S::zero());
                    acc.0[k] = cur + coef.clone() * v.clone();
                }
            }
            return;
        }
        for (i, a) in args[depth].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let c = if depth == 0 { a.clone() } else { coef.clone() * a.clone() };
            self.apply_rec(args, depth + 1, off * self.shape[depth] + i, c, acc);
        }
    }

    pub fn apply1(&self, x: &[S]) -> Vector<S> {
        self.apply(&[x])
    }

    pub fn apply2(&self, x: &[S], y: &[S]) -> Vector<S> {
        self.apply(&[x, y])
    }

    pub fn apply3(&self, x: &[S], y: &[S], z: &[S]) -> Vector<S> {
        self.apply(&[x, y, z])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Tensor<T> {
        Tensor { shape: self.shape.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape, "tensor shapes differ");
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape, "tensor shapes differ");
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| c.clone() * a.clone())
    }

    /// Nonzero entries as (full index tuple, value), in storage order.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, S)> {
        let mut out = Vec::new();
        let mut k = 0;
        for_each_tuple(&self.shape, |idx| {
            if !self.data[k].is_zero() {
                out.push((idx.to_vec(), self.data[k].clone()));
            }
            k += 1;
        });
        out
    }

    /// For a linear map `[in, out]`: the map `self` followed by `then`.
    /// Nonzero output vectors keyed by their input tuple.
    pub(crate) fn nonzero_entries_by_input(&self) -> Vec<(Vec<usize>, Vec<S>)> {
        let mut out = Vec::new();
        for_each_tuple(self.in_dims(), |ix| {
            let v = self.at(ix);
            if !v.is_zero() {
                out.push((ix.to_vec(), v.0));
            }
        });
        out
    }

    pub fn compose(&self, then: &Tensor<S>) -> Tensor<S> {
        assert_eq!(then.shape.len(), 2, "compose expects a linear map");
        assert_eq!(self.out_dim(), then.shape[0], "compose: dimensions differ");
        Tensor::from_fn(self.in_dims(), then.out_dim(), |idx| then.apply1(&self.at(idx)))
    }
}

impl Tensor<Rational> {
    /// Matrix of a linear map `[in, out]` acting on column vectors
    /// (shape `out × in`).
    pub fn to_matrix(&self) -> RationalMatrix {
        assert_eq!(self.shape.len(), 2, "to_matrix expects a linear map");
        let (n_in, n_out) = (self.shape[0], self.shape[1]);
        let mut m = RationalMatrix::zeros(n_out, n_in);
        for i in 0..n_in {
            for o in 0..n_out {
                m.set(o, i, self.get(&[i, o]).clone());
            }
        }
        m
    }

    pub fn from_matrix(m: &RationalMatrix) -> Self {
        let mut t = Tensor::zeros(&[m.cols(), m.rows()]);
        for o in 0..m.rows() {
            for i in 0..m.cols() {
                t.set(&[i, o], m.get(o, i).clone());
            }
        }
        t
    }

    pub fn lift<T: Scalar>(&self) -> Tensor<T> {
        self.map(T::from_rational)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn tuples_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_tuple(&[2, 3], |t| seen.push(t.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[5], vec![1, 2]);
        let mut n = 0;
        for_each_tuple(&[2, 0], |_| n += 1);
        assert_eq!(n, 0);
        for_each_tuple(&[], |_| n += 1);
        assert_eq!(n, 1);
    }

    #[test]
    fn bilinear_apply_matches_basis_values() {
        // m(e_i, e_j) = (i + 2j) e_0 + e_1
        let t = Tensor::from_fn(&[2, 2], 2, |ix| Vector(vec![rat((ix[0] + 2 * ix[1]) as i64), rat(1)]));
        let x = Vector(vec![rat(1), rat(2)]);
        let y = Vector(vec![rat(3), rat(-1)]);
        // sum x_i y_j (i + 2j) = 1*3*0 + 1*(-1)*2 + 2*3*1 + 2*(-1)*3 = 0 - 2 + 6 - 6 = -2
        // sum x_i y_j = 3 * 2 = 6
        assert_eq!(t.apply2(&x, &y), Vector(vec![rat(-2), rat(6)]));
    }

    #[test]
    fn matrix_conversion_round_trip() {
        let t = Tensor::from_data(&[2, 3], (0..6).map(rat).collect());
        let m = t.to_matrix();
        assert_eq!((m.rows(), m.cols()), (3, 2));
        assert_eq!(m.mul_vec(&[rat(1), rat(0)]), t.at(&[0]).0);
        assert_eq!(Tensor::from_matrix(&m), t);
    }
}
