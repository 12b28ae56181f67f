//! The contract between problem plugins and the algorithms.
//!
//! A plugin owns one instance and answers weighted-sum queries on it. The
//! algorithms never look inside solution tokens; they only see images.

use std::cmp::Ordering;
use std::ops::Add;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::types::{Bounds, CostPair, Rational, SolutionRecord, Weight};

/// A bicriteria minimization instance paired with a weighted-sum oracle.
///
/// Implementations must be reentrant: concurrent queries on the same
/// instance may not interfere.
pub trait BicriteriaProblem: Send + Sync {
    /// Short kind name used in reports (`mst`, `path`, `cut`, `vc`, ...).
    fn kind(&self) -> &'static str;

    /// Approximation ratio of the weighted-sum oracle; `1` for exact ones.
    fn alpha(&self) -> Rational;

    /// Whether zero objective values are allowed for this instance.
    fn relaxed(&self) -> bool;

    fn evaluate(&self, token: &[usize]) -> Result<CostPair>;

    fn bounds(&self) -> Bounds;

    /// Minimizes `c1 * f1 + c2 * f2` (up to `alpha`) for `c1, c2 >= 0`, not
    /// both zero.
    fn solve_scalarized(&self, c1: &Rational, c2: &Rational) -> Result<SolutionRecord>;

    /// Minimizes `f1 + gamma * f2` (up to `alpha`).
    fn solve_weighted_sum(&self, gamma: &Weight) -> Result<SolutionRecord> {
        let record = self.solve_scalarized(&Rational::one(), gamma.value())?;
        Ok(record.with_weight(Some(gamma.clone())))
    }
}

/// `constant + slope * gamma`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearValue {
    pub constant: Rational,
    pub slope: Rational,
}

impl LinearValue {
    pub fn new(constant: Rational, slope: Rational) -> Self {
        LinearValue { constant, slope }
    }

    pub fn zero() -> Self {
        LinearValue::new(Rational::zero(), Rational::zero())
    }

    pub fn from_costs(costs: &CostPair) -> Self {
        LinearValue::new(costs.f1.clone(), costs.f2.clone())
    }

    pub fn at(&self, gamma: &Rational) -> Rational {
        &self.constant + &self.slope * gamma
    }

    /// `c1 * constant + c2 * slope`
    pub fn scalarized(&self, c1: &Rational, c2: &Rational) -> Rational {
        c1 * &self.constant + c2 * &self.slope
    }
}

impl Add<&LinearValue> for &LinearValue {
    type Output = LinearValue;

    fn add(self, rhs: &LinearValue) -> LinearValue {
        LinearValue::new(&self.constant + &rhs.constant, &self.slope + &rhs.slope)
    }
}

/// The unique `gamma` where `p` and `q` agree, or `None` for parallel lines.
pub fn critical_gamma(p: &LinearValue, q: &LinearValue) -> Option<Rational> {
    let slope_gap = &p.slope - &q.slope;
    if slope_gap.is_zero() {
        None
    } else {
        Some((&q.constant - &p.constant) / slope_gap)
    }
}

/// Comparison callback handed to a parametric algorithm run. Every
/// comparison between two `gamma`-dependent quantities goes through it.
pub type Comparator<'a> = dyn FnMut(&LinearValue, &LinearValue) -> Result<Ordering> + 'a;

/// Compares at the fixed scalarization `c1 * constant + c2 * slope`.
pub fn scalar_comparator(c1: Rational, c2: Rational) -> impl FnMut(&LinearValue, &LinearValue) -> Result<Ordering> {
    move |p, q| Ok(p.scalarized(&c1, &c2).cmp(&q.scalarized(&c1, &c2)))
}

/// Compares at `gamma`, breaking ties as at `gamma + delta` for an
/// infinitesimal `delta > 0` (i.e. by slope).
pub fn right_limit_comparator(gamma: Rational) -> impl FnMut(&LinearValue, &LinearValue) -> Result<Ordering> {
    move |p, q| Ok(p.at(&gamma).cmp(&q.at(&gamma)).then_with(|| p.slope.cmp(&q.slope)))
}

/// One piece of a parametric solution: the record is optimal for every
/// `gamma` in `[lo, hi]` (`hi = None` means unbounded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricPiece {
    pub lo: Rational,
    pub hi: Option<Rational>,
    pub record: SolutionRecord,
}

impl ParametricPiece {
    pub fn contains(&self, gamma: &Rational) -> bool {
        &self.lo <= gamma && self.hi.as_ref().is_none_or(|hi| gamma <= hi)
    }
}

/// An exact weighted-sum algorithm that can be run over symbolic
/// `LinearValue` weights, as needed by parametric search.
pub trait ParametricProblem: BicriteriaProblem {
    /// Runs the exact algorithm on edge weights `w1 + gamma * w2`, routing
    /// every weight comparison through `cmp`. Returns the solution token.
    fn parametric_run(&self, cmp: &mut Comparator<'_>) -> Result<Vec<usize>>;

    /// All solutions that are optimal on some `gamma`-interval, covering
    /// `(0, inf)`.
    fn parametric_all(&self) -> Result<Vec<ParametricPiece>>;

    /// The weighted-sum optimum at `gamma` with ties resolved toward minimum
    /// `f2`, i.e. the solution that stays optimal just to the right of
    /// `gamma`.
    fn solve_right_limit(&self, gamma: &Weight) -> Result<SolutionRecord> {
        let mut cmp = right_limit_comparator(gamma.value().clone());
        let token = self.parametric_run(&mut cmp)?;
        let image = self.evaluate(&token)?;
        Ok(SolutionRecord::new(token, image).with_weight(Some(gamma.clone())))
    }
}

/// Rejects oracles that are not exact.
pub fn require_exact(problem: &dyn BicriteriaProblem) -> Result<()> {
    let alpha = problem.alpha();
    if alpha.is_one() {
        Ok(())
    } else {
        Err(Error::ExactOracleRequired {
            alpha: alpha.to_string(),
        })
    }
}

pub(crate) fn check_scalarization(c1: &Rational, c2: &Rational) -> Result<()> {
    if c1.is_negative() || c2.is_negative() || (c1.is_zero() && c2.is_zero()) {
        return Err(Error::invalid(format!(
            "scalarization coefficients must be nonnegative and not both zero, got ({c1}, {c2})"
        )));
    }
    Ok(())
}

/// The weight `c2 / c1` a scalarization corresponds to, if `c1 > 0`.
pub(crate) fn implied_weight(c1: &Rational, c2: &Rational) -> Option<Weight> {
    if c1.is_positive() {
        Weight::new(c2 / c1).ok()
    } else {
        None
    }
}
