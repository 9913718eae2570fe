use crate::error::{expect_shape, shape_err, Result};
use crate::exactlin::{Rational, Scalar};
use crate::report::CheckReport;
use crate::tensor::{Tensor, Vector};

/// Finite-dimensional algebra given by `mul[i][j][k]`, the coefficient of
/// `e_k` in `e_i · e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct AssocAlgebra<S = Rational> {
    pub mul: Tensor<S>,
}

impl<S: Scalar> AssocAlgebra<S> {
    pub fn new(mul: Tensor<S>) -> Result<Self> {
        let n = mul.out_dim();
        expect_shape("mul", mul.shape(), &[n, n, n])?;
        Ok(AssocAlgebra { mul })
    }

    pub fn zero(dim: usize) -> Self {
        AssocAlgebra { mul: Tensor::zeros(&[dim, dim, dim]) }
    }

    pub fn dim(&self) -> usize {
        self.mul.out_dim()
    }

    pub fn mul(&self, x: &[S], y: &[S]) -> Vector<S> {
        self.mul.apply2(x, y)
    }

    fn unit(&self, i: usize) -> Vector<S> {
        Vector::unit(self.dim(), i)
    }
}

/// Bimodule `M` over an algebra `A`: `left[a][m][k]` is the coefficient of
/// `e_k` in `a·m`, `right[m][a][k]` that of `m·a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule<S = Rational> {
    pub left: Tensor<S>,
    pub right: Tensor<S>,
}

impl<S: Scalar> Bimodule<S> {
    pub fn new(algebra_dim: usize, left: Tensor<S>, right: Tensor<S>) -> Result<Self> {
        let m = left.out_dim();
        expect_shape("left action", left.shape(), &[algebra_dim, m, m])?;
        expect_shape("right action", right.shape(), &[m, algebra_dim, m])?;
        Ok(Bimodule { left, right })
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &AssocAlgebra<S>) -> Self {
        Bimodule { left: a.mul.clone(), right: a.mul.clone() }
    }

    pub fn zero(algebra_dim: usize, dim: usize) -> Self {
        Bimodule { left: Tensor::zeros(&[algebra_dim, dim, dim]), right: Tensor::zeros(&[dim, algebra_dim, dim]) }
    }

    pub fn dim(&self) -> usize {
        self.left.out_dim()
    }

    pub fn algebra_dim(&self) -> usize {
        self.left.shape()[0]
    }

    pub fn act_left(&self, a: &[S], m: &[S]) -> Vector<S> {
        self.left.apply2(a, m)
    }

    pub fn act_right(&self, m: &[S], a: &[S]) -> Vector<S> {
        self.right.apply2(m, a)
    }

    pub(crate) fn check_shapes(&self, algebra_dim: usize) -> Result<()> {
        let m = self.dim();
        expect_shape("left action", self.left.shape(), &[algebra_dim, m, m])?;
        expect_shape("right action", self.right.shape(), &[m, algebra_dim, m])
    }
}

/// Associativity on every basis triple, condition id `assoc`.
pub fn check_associative<S: Scalar>(a: &AssocAlgebra<S>) -> Result<CheckReport<S>> {
    let n = a.dim();
    expect_shape("mul", a.mul.shape(), &[n, n, n])?;
    let e = |i| a.unit(i);
    let mut r = CheckReport::new();
    r.family("assoc", "(x,y,z)", &[n, n, n], |t| {
        let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
        (a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)))
    });
    Ok(r)
}

/// The three bimodule axioms on every basis triple:
/// `left` (x·y)·m = x·(y·m), `middle` x·(m·y) = (x·m)·y,
/// `right` m·(x·y) = (m·x)·y.
pub fn check_bimodule<S: Scalar>(a: &AssocAlgebra<S>, m: &Bimodule<S>) -> Result<CheckReport<S>> {
    let (n, k) = (a.dim(), m.dim());
    m.check_shapes(n)?;
    let x = |i| Vector::<S>::unit(n, i);
    let v = |i| Vector::<S>::unit(k, i);
    let mut r = CheckReport::new();
    r.family("left", "(x,y,m)", &[n, n, k], |t| {
        let (x, y, u) = (x(t[0]), x(t[1]), v(t[2]));
        (m.act_left(&a.mul(&x, &y), &u), m.act_left(&x, &m.act_left(&y, &u)))
    });
    r.family("middle", "(x,m,y)", &[n, k, n], |t| {
        let (x, u, y) = (x(t[0]), v(t[1]), x(t[2]));
        (m.act_left(&x, &m.act_right(&u, &y)), m.act_right(&m.act_left(&x, &u), &y))
    });
    r.family("right", "(m,x,y)", &[k, n, n], |t| {
        let (u, x, y) = (v(t[0]), x(t[1]), x(t[2]));
        (m.act_right(&u, &a.mul(&x, &y)), m.act_right(&m.act_right(&u, &x), &y))
    });
    Ok(r)
}

/// Hochschild `n`-cochain `A^{⊗n} → M`.
#[derive(Clone, Debug, PartialEq)]
pub struct HochschildCochain<S = Rational> {
    pub values: Tensor<S>,
}

impl<S: Scalar> HochschildCochain<S> {
    pub fn arity(&self) -> usize {
        self.values.shape().len() - 1
    }

    pub fn zero(arity: usize, algebra_dim: usize, module_dim: usize) -> Self {
        let mut shape = vec![algebra_dim; arity];
        shape.push(module_dim);
        HochschildCochain { values: Tensor::zeros(&shape) }
    }
}

/// `(df)(x_1,…,x_{n+1}) = x_1·f(x_2,…) + Σ_i (-1)^i f(…, x_i·x_{i+1}, …)
///  + (-1)^{n+1} f(x_1,…,x_n)·x_{n+1}`, for arity `n ≥ 1`.
pub fn hochschild_coboundary<S: Scalar>(
    a: &AssocAlgebra<S>,
    m: &Bimodule<S>,
    f: &HochschildCochain<S>,
) -> Result<HochschildCochain<S>> {
    let n = f.arity();
    if n == 0 {
        return Err(shape_err("arity-0 cochains are not supported (the degree-0 differential is not used)"));
    }
    let (da, dm) = (a.dim(), m.dim());
    m.check_shapes(da)?;
    let mut expected = vec![da; n];
    expected.push(dm);
    expect_shape("cochain", f.values.shape(), &expected)?;

    let sign = |k: usize, v: Vector<S>| if k.is_multiple_of(2) { v } else { -v };
    let values = Tensor::from_fn(&vec![da; n + 1], dm, |t| {
        let units: Vec<Vector<S>> = t.iter().map(|&i| Vector::unit(da, i)).collect();
        let mut acc = m.act_left(&units[0], &f.values.at(&t[1..]));
        for i in 1..=n {
            let prod = a.mul(&units[i - 1], &units[i]);
            let mut args: Vec<&[S]> = Vec::with_capacity(n);
            for u in &units[..i - 1] {
                args.push(u);
            }
            args.push(&prod);
            for u in &units[i + 1..] {
                args.push(u);
            }
            acc = acc + sign(i, f.values.apply(&args));
        }
        acc + sign(n + 1, m.act_right(&f.values.at(&t[..n]), &units[n]))
    });
    Ok(HochschildCochain { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn idempotent() -> AssocAlgebra {
        AssocAlgebra::new(Tensor::from_data(&[1, 1, 1], vec![rat(1)])).unwrap()
    }

    #[test]
    fn associativity_examples() {
        assert!(check_associative(&idempotent()).unwrap().passed());
        assert!(check_associative(&AssocAlgebra::<Rational>::zero(1)).unwrap().passed());
        // e1·e1 = e2, e1·e2 = e1, all else zero
        let mut mul = Tensor::zeros(&[2, 2, 2]);
        mul.set(&[0, 0, 1], rat(1));
        mul.set(&[0, 1, 0], rat(1));
        let r = check_associative(&AssocAlgebra::new(mul).unwrap()).unwrap();
        let v = &r.condition("assoc").unwrap().violations[0];
        assert_eq!(v.tuple, vec![0, 0, 0]);
        assert_eq!(v.lhs, Vector(vec![rat(0), rat(0)]));
        assert_eq!(v.rhs, Vector(vec![rat(1), rat(0)]));
    }

    #[test]
    fn bimodule_examples() {
        let a = idempotent();
        assert!(check_bimodule(&a, &Bimodule::regular(&a)).unwrap().passed());
        assert!(check_bimodule(&a, &Bimodule::zero(1, 2)).unwrap().passed());
        let m =
            Bimodule::new(1, Tensor::from_data(&[1, 1, 1], vec![rat(1)]), Tensor::from_data(&[1, 1, 1], vec![rat(2)]))
                .unwrap();
        let r = check_bimodule(&a, &m).unwrap();
        assert!(r.condition("middle").unwrap().violations.is_empty());
        let v = &r.condition("right").unwrap().violations[0];
        assert_eq!((v.lhs[0].clone(), v.rhs[0].clone()), (rat(2), rat(4)));
    }

    #[test]
    fn coboundary_examples() {
        let a = idempotent();
        let m = Bimodule::regular(&a);
        let f = HochschildCochain { values: Tensor::identity(1) };
        let df = hochschild_coboundary(&a, &m, &f).unwrap();
        assert_eq!(df.values.at(&[0, 0]), Vector(vec![rat(1)]));
        let ddf = hochschild_coboundary(&a, &m, &df).unwrap();
        assert!(ddf.values.is_zero());
        let z = HochschildCochain::zero(2, 1, 1);
        assert!(hochschild_coboundary(&a, &m, &z).unwrap().values.is_zero());
        assert!(hochschild_coboundary(&a, &m, &HochschildCochain::zero(0, 1, 1)).is_err());
    }
}
