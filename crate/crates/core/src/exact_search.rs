//! Faster budget algorithms for exact weighted-sum oracles.
//!
//! With an exact oracle, `f1` of the returned solution is nondecreasing and
//! `f2` nonincreasing in `gamma`. That monotonicity allows a binary search
//! over the geometric grid, and a parametric (Megiddo-style) search that
//! simulates the oracle symbolically in `gamma` and resolves each
//! `gamma`-dependent comparison with one concrete oracle call.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::problem::{critical_gamma, require_exact, BicriteriaProblem, LinearValue, ParametricProblem};
use crate::sweep::{index_range, BudgetQuery, BudgetSolution, IndexRange};
use crate::types::{
    int, pow_one_plus_eps, Epsilon, FactorVariant, GuaranteeCertificate, Rational, SolutionRecord, Weight,
};

/// Binary search over the grid for the largest index whose solution meets
/// `f1 <= (1 + 2 eps) B`. Gives a `(1 + 2 eps, 1 + 2/eps)`-approximation with
/// at most `floor(log2(grid size)) + 1` oracle calls.
pub fn solve_budget_binary(problem: &dyn BicriteriaProblem, query: &BudgetQuery) -> Result<BudgetSolution> {
    require_exact(problem)?;
    let range = index_range(&query.eps, &query.budget, &problem.bounds());
    binary_search_grid(problem, query, range)
}

pub(crate) fn binary_search_grid(
    problem: &dyn BicriteriaProblem,
    query: &BudgetQuery,
    range: IndexRange,
) -> Result<BudgetSolution> {
    let (budget_factor, cost_factor) = FactorVariant::Grid.factors(query.eps.value(), &int(1));
    let limit = &budget_factor * &query.budget;
    let (mut lo, mut hi) = (range.i_min, range.i_max);
    let mut best: Option<SolutionRecord> = None;
    let mut transcript = Vec::new();
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        let record = problem.solve_weighted_sum(&Weight::new(pow_one_plus_eps(&query.eps, mid))?)?;
        transcript.push(record.clone());
        if record.image.f1 > limit {
            hi = mid - 1;
        } else {
            best = Some(record);
            lo = mid + 1;
        }
    }
    match best {
        Some(record) => Ok(BudgetSolution {
            record,
            certificate: GuaranteeCertificate {
                alpha: int(1),
                epsilon: query.eps.value().clone(),
                budget_factor,
                cost_factor,
                budget: query.budget.clone(),
                oracle_calls: transcript.len(),
            },
            transcript,
        }),
        None => Err(Error::NoCertificate { transcript }),
    }
}

/// Closed interval of candidate weights, `0 < lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl GammaInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if !lo.is_positive() || lo > hi {
            return Err(Error::invalid(format!("invalid gamma interval [{lo}, {hi}]")));
        }
        Ok(GammaInterval { lo, hi })
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, gamma: &Rational) -> bool {
        &self.lo <= gamma && gamma <= &self.hi
    }

    pub fn contains_interval(&self, other: &GammaInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// How a `gamma`-dependent comparison was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// Critical value inside the interval; the search continues to its left.
    Left,
    /// Critical value inside the interval; the search continues to its right.
    Right,
    /// Critical value at or below the interval; no oracle call needed.
    CriticalBelow,
    /// Critical value at or above the interval; no oracle call needed.
    CriticalAbove,
}

/// Settles one comparison whose outcome flips at `gamma_crit`.
///
/// Outside the open interval the outcome is already fixed. Inside, the
/// oracle runs at `gamma_crit` (ties broken toward the solution that stays
/// optimal to the right); if that solution overshoots `(1 + eps) B` every
/// larger weight does too, so the search keeps `[lo, gamma_crit]`, otherwise
/// it keeps `[gamma_crit, hi]`. The probe record is returned when one was
/// made.
pub fn resolve_comparison(
    problem: &dyn ParametricProblem,
    interval: &GammaInterval,
    gamma_crit: &Rational,
    budget: &Rational,
    eps: &Epsilon,
) -> Result<(Resolution, GammaInterval, Option<SolutionRecord>)> {
    require_exact(problem)?;
    if gamma_crit <= &interval.lo {
        return Ok((Resolution::CriticalBelow, interval.clone(), None));
    }
    if gamma_crit >= &interval.hi {
        return Ok((Resolution::CriticalAbove, interval.clone(), None));
    }
    let probe = problem.solve_right_limit(&Weight::new(gamma_crit.clone())?)?;
    let limit = (int(1) + eps.value()) * budget;
    if probe.image.f1 > limit {
        let narrowed = GammaInterval::new(interval.lo.clone(), gamma_crit.clone())?;
        Ok((Resolution::Left, narrowed, Some(probe)))
    } else {
        let narrowed = GammaInterval::new(gamma_crit.clone(), interval.hi.clone())?;
        Ok((Resolution::Right, narrowed, Some(probe)))
    }
}

#[derive(Clone, Debug)]
pub struct ParametricSolution {
    pub solution: BudgetSolution,
    /// Interval on which the master run's comparison outcomes are all fixed.
    pub final_interval: GammaInterval,
    /// Comparisons made by the master run.
    pub comparisons: usize,
    /// Comparisons that needed an oracle call.
    pub resolutions: usize,
}

/// Parametric search: a `(1 + eps, 1 + 1/eps)`-approximation using at most
/// one oracle call per master-run comparison plus one.
pub fn solve_budget_parametric(problem: &dyn ParametricProblem, query: &BudgetQuery) -> Result<ParametricSolution> {
    require_exact(problem)?;
    let bounds = problem.bounds();
    let scaled = query.eps.value() * &query.budget;
    let mut interval = GammaInterval::new(&scaled / &bounds.ub2, &scaled / &bounds.lb2)?;
    let mut transcript = Vec::new();
    let mut comparisons = 0usize;
    {
        let mut cmp = |p: &LinearValue, q: &LinearValue| -> Result<Ordering> {
            comparisons += 1;
            if let Some(gamma_crit) = critical_gamma(p, q) {
                let (_, narrowed, probe) =
                    resolve_comparison(problem, &interval, &gamma_crit, &query.budget, &query.eps)?;
                interval = narrowed;
                transcript.extend(probe);
            }
            let at = interval.midpoint();
            Ok(p.at(&at).cmp(&q.at(&at)))
        };
        problem.parametric_run(&mut cmp)?;
    }
    let resolutions = transcript.len();
    let record = problem.solve_weighted_sum(&Weight::new(interval.midpoint())?)?;
    transcript.push(record.clone());

    let (budget_factor, cost_factor) = FactorVariant::Parametric.factors(query.eps.value(), &int(1));
    if record.image.f1 > &budget_factor * &query.budget {
        return Err(Error::NoCertificate { transcript });
    }
    Ok(ParametricSolution {
        solution: BudgetSolution {
            record,
            certificate: GuaranteeCertificate {
                alpha: int(1),
                epsilon: query.eps.value().clone(),
                budget_factor,
                cost_factor,
                budget: query.budget.clone(),
                oracle_calls: transcript.len(),
            },
            transcript,
        },
        final_interval: interval,
        comparisons,
        resolutions,
    })
}
