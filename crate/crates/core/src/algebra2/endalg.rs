use crate::error::Result;
use crate::exactlin::{Rational, RationalMatrix};
use crate::tensor::{Tensor, Vector};

use super::{TwoTermAlgebra, TwoTermComplex};

/// The strict 2-algebra of endomorphisms of a two-term complex `V1 →∂ V0`,
/// with the bases used for its coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct EndAlgebra {
    pub algebra: TwoTermAlgebra,
    /// Degree 0: pairs `(X0, X1)` of linear maps with `X0∘∂ = ∂∘X1`.
    pub basis0: Vec<(Tensor, Tensor)>,
    /// Degree 1: maps `A: V0 → V1`, the elementary maps `e_p ↦ e_q` in
    /// lexicographic `(p, q)` order.
    pub basis1: Vec<Tensor>,
}

/// Build `End(V)`: degree 0 is the space of chain endomorphisms, degree 1 is
/// `Hom(V0, V1)`, `δ(A) = (∂∘A, A∘∂)`, products are composition
/// (`X·Y = X∘Y`, `X·A = X1∘A`, `A·X = A∘X0`, `A·A' = 0`) and `l3 = 0`.
pub fn build_end_algebra(v: &TwoTermComplex<Rational>) -> Result<EndAlgebra> {
    let (m0, m1) = (v.dim0(), v.dim1());
    let split = |c: &[Rational]| {
        (Tensor::from_data(&[m0, m0], c[..m0 * m0].to_vec()), Tensor::from_data(&[m1, m1], c[m0 * m0..].to_vec()))
    };
    let chain_defect = |c: &[Rational]| -> Vec<Rational> {
        let (x0, x1) = split(c);
        let mut out = Vec::with_capacity(m1 * m0);
        for j in 0..m1 {
            let e = Vector::<Rational>::unit(m1, j);
            out.extend((x0.apply1(&v.apply(&e)) - v.apply(&x1.apply1(&e))).0);
        }
        out
    };
    let n_coords = m0 * m0 + m1 * m1;
    let columns: Vec<Vec<Rational>> =
        (0..n_coords).map(|i| chain_defect(&Vector::<Rational>::unit(n_coords, i))).collect();
    let kernel = RationalMatrix::from_columns(m1 * m0, &columns).kernel_basis();
    let basis0: Vec<(Tensor, Tensor)> = kernel.basis().iter().map(|c| split(c)).collect();
    let n0 = basis0.len();
    let n1 = m0 * m1;
    let basis1: Vec<Tensor> = (0..n1).map(|i| Tensor::from_data(&[m0, m1], Vector::unit(n1, i).0)).collect();

    let coords0 = |x0: &Tensor, x1: &Tensor| -> Vector<Rational> {
        let mut flat = x0.data().to_vec();
        flat.extend_from_slice(x1.data());
        Vector(kernel.coordinates(&flat).expect("composite of chain maps is a chain map"))
    };
    let coords1 = |a: &Tensor| Vector(a.data().to_vec());
    let diff_t = &v.diff;

    let diff = Tensor::from_fn(&[n1], n0, |ix| {
        let a = &basis1[ix[0]];
        coords0(&a.compose(diff_t), &diff_t.compose(a))
    });
    let l2_00 = Tensor::from_fn(&[n0, n0], n0, |ix| {
        let (x, y) = (&basis0[ix[0]], &basis0[ix[1]]);
        coords0(&y.0.compose(&x.0), &y.1.compose(&x.1))
    });
    let l2_01 = Tensor::from_fn(&[n0, n1], n1, |ix| coords1(&basis1[ix[1]].compose(&basis0[ix[0]].1)));
    let l2_10 = Tensor::from_fn(&[n1, n0], n1, |ix| coords1(&basis0[ix[1]].0.compose(&basis1[ix[0]])));
    let algebra = TwoTermAlgebra::new(TwoTermComplex { diff }, l2_00, l2_01, l2_10, Tensor::zeros(&[n0, n0, n0, n1]))?;
    Ok(EndAlgebra { algebra, basis0, basis1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra2::check_algebra;
    use crate::exactlin::rat;

    #[test]
    fn zero_differential_on_line() {
        let e = build_end_algebra(&TwoTermComplex::zero(1, 1)).unwrap();
        assert_eq!((e.algebra.dim0(), e.algebra.dim1()), (2, 1));
        assert!(e.algebra.complex.diff.is_zero());
        assert!(check_algebra(&e.algebra).unwrap().passed());
    }

    #[test]
    fn unit_differential_on_line() {
        let v = TwoTermComplex { diff: Tensor::identity(1) };
        let e = build_end_algebra(&v).unwrap();
        assert_eq!((e.algebra.dim0(), e.algebra.dim1()), (1, 1));
        // X0 = X1 on the only basis element
        let (x0, x1) = &e.basis0[0];
        assert_eq!(x0.data(), x1.data());
        // δ(A) = (∂A, A∂) is nonzero; it equals the pair (a, a), whose two
        // scalars sum to 2a.
        let d = e.algebra.d(&e.algebra.e1(0));
        assert!(!d.is_zero());
        let expected = &[rat(1)] as &[Rational];
        assert_eq!(d.0, Vector(expected.to_vec()).scale(&x0.data()[0].recip()).0);
        assert!(check_algebra(&e.algebra).unwrap().passed());
    }
}
