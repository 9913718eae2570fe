//! Violation reports shared by every axiom checker.

use crate::exactlin::{Poly, Rational, Scalar};
use crate::tensor::{for_each_tuple, Vector};

/// One failing basis tuple of one condition.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation<S = Rational> {
    pub tuple: Vec<usize>,
    pub lhs: Vector<S>,
    pub rhs: Vector<S>,
}

/// All failures of a single labelled condition. `args` names the sorts of
/// the basis tuple, e.g. `"(x,y,a)"`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport<S = Rational> {
    pub id: String,
    pub args: String,
    pub violations: Vec<Violation<S>>,
}

/// Result of running a checker: every condition in a fixed order, each with
/// its (possibly empty) violation list. Violations within a condition are in
/// lexicographic tuple order.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport<S = Rational> {
    pub conditions: Vec<ConditionReport<S>>,
}

impl<S: Scalar> Default for CheckReport<S> {
    fn default() -> Self {
        CheckReport { conditions: Vec::new() }
    }
}

impl<S: Scalar> CheckReport<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.violations.is_empty())
    }

    pub fn violation_count(&self) -> usize {
        self.conditions.iter().map(|c| c.violations.len()).sum()
    }

    pub fn condition(&self, id: &str) -> Option<&ConditionReport<S>> {
        self.conditions.iter().find(|c| c.id == id)
    }

    /// Ids of conditions with at least one violation.
    pub fn failed(&self) -> Vec<&str> {
        self.conditions.iter().filter(|c| !c.violations.is_empty()).map(|c| c.id.as_str()).collect()
    }

    pub fn violations(&self) -> impl Iterator<Item = (&str, &Violation<S>)> {
        self.conditions.iter().flat_map(|c| c.violations.iter().map(move |v| (c.id.as_str(), v)))
    }

    /// Evaluate one condition on every basis tuple of `dims`; `eval` returns
    /// the two sides.
    pub fn family(
        &mut self,
        id: &str,
        args: &str,
        dims: &[usize],
        mut eval: impl FnMut(&[usize]) -> (Vector<S>, Vector<S>),
    ) {
        let mut violations = Vec::new();
        for_each_tuple(dims, |t| {
            let (lhs, rhs) = eval(t);
            if lhs != rhs {
                violations.push(Violation { tuple: t.to_vec(), lhs, rhs });
            }
        });
        self.conditions.push(ConditionReport { id: id.to_string(), args: args.to_string(), violations });
    }

    /// Append every condition of `other`, prefixing ids with `prefix`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport<S>) {
        for mut c in other.conditions {
            c.id = format!("{prefix}{}", c.id);
            self.conditions.push(c);
        }
    }
}

/// A nonzero coefficient of `lhs - rhs` in a polynomial check.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientFailure {
    pub condition: String,
    pub tuple: Vec<usize>,
    pub degree: usize,
    /// Coefficient of `λ^degree` in `lhs - rhs`.
    pub residual: Vector<Rational>,
}

impl CheckReport<Poly> {
    /// Split every violation into the powers of `λ` at which it fails.
    pub fn coefficient_failures(&self) -> Vec<CoefficientFailure> {
        let mut out = Vec::new();
        for (id, v) in self.violations() {
            let diff = v.lhs.clone() - v.rhs.clone();
            let top = diff.iter().filter_map(Poly::degree).max().unwrap_or(0);
            for k in 0..=top {
                let residual = Vector(diff.iter().map(|p| p.coeff(k)).collect());
                if !residual.is_zero() {
                    out.push(CoefficientFailure {
                        condition: id.to_string(),
                        tuple: v.tuple.clone(),
                        degree: k,
                        residual,
                    });
                }
            }
        }
        out
    }

    /// True when no condition fails at `λ^k`.
    pub fn degree_clean(&self, k: usize) -> bool {
        self.coefficient_failures().iter().all(|f| f.degree != k)
    }
}
