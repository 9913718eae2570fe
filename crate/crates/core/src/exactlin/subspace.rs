use num::Zero;

use super::{Rational, RationalMatrix};

/// A subspace of `Q^ambient_dim` given by linearly independent basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubspaceError {
    #[error("basis vector {index} has length {len}, expected {ambient}")]
    Length { index: usize, len: usize, ambient: usize },
    #[error("basis vectors are linearly dependent (rank {rank} < {count})")]
    Dependent { rank: usize, count: usize },
}

impl Subspace {
    /// Checked constructor: verifies lengths and independence.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Result<Self, SubspaceError> {
        for (index, v) in basis.iter().enumerate() {
            if v.len() != ambient_dim {
                return Err(SubspaceError::Length { index, len: v.len(), ambient: ambient_dim });
            }
        }
        let rank = RationalMatrix::from_columns(ambient_dim, &basis).rank();
        if rank < basis.len() {
            return Err(SubspaceError::Dependent { rank, count: basis.len() });
        }
        Ok(Subspace { ambient_dim, basis })
    }

    pub(crate) fn from_independent(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Self {
        debug_assert!(Self::new(ambient_dim, basis.clone()).is_ok());
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Matrix with the basis vectors as columns.
    pub fn as_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.iter().all(Zero::is_zero) {
            return Some(vec![Rational::zero(); self.dim()]);
        }
        self.as_matrix().solve(v)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length differs from ambient dimension");
        self.coordinates(v).is_some()
    }

    /// Vectors from `candidates` that extend a basis of `self` to a basis of
    /// the span of both, chosen greedily in order.
    pub fn complement_in(&self, candidates: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let mut cols = self.basis.clone();
        let mut rank = cols.len();
        let mut chosen = Vec::new();
        for c in candidates {
            cols.push(c.clone());
            let r = RationalMatrix::from_columns(self.ambient_dim, &cols).rank();
            if r > rank {
                rank = r;
                chosen.push(c.clone());
            } else {
                cols.pop();
            }
        }
        chosen
    }
}

/// True when `v` lies in the span of `basis` (vectors of length `v.len()`).
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let m = RationalMatrix::from_columns(v.len(), basis);
    m.rank() == m.hstack(&RationalMatrix::from_columns(v.len(), &[v.to_vec()])).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn in_span_examples() {
        assert!(in_span(&[vec![rat(1), rat(5)]], &[rat(0), rat(0)]));
        assert!(!in_span(&[vec![rat(1), rat(0)]], &[rat(0), rat(1)]));
        assert!(in_span(&[vec![rat(1), rat(2)]], &[rat(2), rat(4)]));
    }

    #[test]
    fn checked_constructor_rejects_dependence() {
        let e = Subspace::new(2, vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert!(matches!(e, Err(SubspaceError::Dependent { rank: 1, count: 2 })));
    }

    #[test]
    fn complement_skips_dependent_candidates() {
        let s = Subspace::new(3, vec![vec![rat(1), rat(0), rat(0)]]).unwrap();
        let c = s.complement_in(&[
            vec![rat(2), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(0)],
        ]);
        assert_eq!(c, vec![vec![rat(0), rat(1), rat(0)]]);
    }
}
