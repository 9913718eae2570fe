//! Exact arithmetic over the rationals: scalars, dense matrices, subspaces,
//! and polynomials in one variable with rational coefficients.

mod matrix;
mod poly;
mod subspace;

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num::{BigInt, One, Zero};

pub use matrix::{RationalMatrix, Rref};
pub use poly::Poly;
pub use subspace::{in_span, Subspace, SubspaceError};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num::BigRational;

/// The coefficient ring used by the generic checkers. Implemented by
/// [`Rational`] and by [`Poly`], so every axiom check can also be run on a
/// structure whose constants are polynomials in a formal parameter.
pub trait Scalar:
    Clone + PartialEq + Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self> + Send + Sync
{
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for Poly {
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
}

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parse `"p"` or `"p/q"` (sign on the numerator, `q > 0`).
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-7/4", "12345678901234567890/7"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("6/3").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1/-2", "1/2/3", "0.5"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let r = parse_rational("-4/6").unwrap();
        assert_eq!(*r.numer(), BigInt::from(-2));
        assert_eq!(*r.denom(), BigInt::from(3));
    }
}
