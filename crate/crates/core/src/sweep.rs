//! Budget-constrained approximation by sweeping the weighted-sum oracle over
//! the geometric grid `gamma = (1 + eps)^i`.
//!
//! With an `alpha`-approximate oracle, some grid weight lies within a factor
//! `1 + eps` of `eps * B / OPT(B)`, and the record returned there satisfies
//! `f1 <= alpha (1 + 2 eps) B` and `f2 <= alpha (1 + 2/eps) OPT(B)`. The sweep
//! evaluates every grid point and keeps the best record meeting the relaxed
//! budget.

use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::problem::BicriteriaProblem;
use crate::types::{
    ceil_log, floor_log, int, pow_one_plus_eps, Bounds, Epsilon, FactorVariant, GuaranteeCertificate, Rational,
    SolutionRecord, Weight,
};

/// Inclusive range of grid exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub i_min: i64,
    pub i_max: i64,
}

impl IndexRange {
    pub fn new(i_min: i64, i_max: i64) -> Result<Self> {
        if i_min > i_max {
            return Err(Error::invalid(format!("empty index range [{i_min}, {i_max}]")));
        }
        Ok(IndexRange { i_min, i_max })
    }

    /// Exponents bracketing `[lo, hi]`: the largest `i` with
    /// `(1+eps)^i <= lo` up to the smallest `i` with `(1+eps)^i >= hi`.
    pub fn bracketing(eps: &Epsilon, lo: &Rational, hi: &Rational) -> Self {
        IndexRange {
            i_min: floor_log(eps, lo),
            i_max: ceil_log(eps, hi),
        }
    }

    pub fn len(&self) -> usize {
        (self.i_max - self.i_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.i_min..=self.i_max
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetQuery {
    pub budget: Rational,
    pub eps: Epsilon,
}

impl BudgetQuery {
    pub fn new(budget: Rational, eps: Epsilon) -> Result<Self> {
        if !budget.is_positive() {
            return Err(Error::invalid(format!("budget must be positive, got {budget}")));
        }
        Ok(BudgetQuery { budget, eps })
    }
}

/// Result of a budget run: the chosen record, what it guarantees, and every
/// record the oracle returned along the way.
#[derive(Clone, Debug)]
pub struct BudgetSolution {
    pub record: SolutionRecord,
    pub certificate: GuaranteeCertificate,
    pub transcript: Vec<SolutionRecord>,
}

/// Grid exponents whose weights bracket `[eps B / UB(2), eps B / LB(2)]`.
pub fn index_range(eps: &Epsilon, budget: &Rational, bounds: &Bounds) -> IndexRange {
    let scaled = eps.value() * budget;
    IndexRange::bracketing(eps, &(&scaled / &bounds.ub2), &(&scaled / &bounds.lb2))
}

/// Calls the oracle at `(1+eps)^i` for every `i` in `range`, in index order.
pub(crate) fn run_grid(
    problem: &dyn BicriteriaProblem,
    eps: &Epsilon,
    range: IndexRange,
    parallel: bool,
) -> Result<Vec<SolutionRecord>> {
    let solve = |i: i64| problem.solve_weighted_sum(&Weight::new(pow_one_plus_eps(eps, i))?);
    if parallel {
        range.iter().collect::<Vec<_>>().into_par_iter().map(solve).collect()
    } else {
        range.iter().map(solve).collect()
    }
}

/// Picks the qualifying record with the smallest `f2`, then smallest `f1`,
/// then the earliest one.
pub(crate) fn select_within(records: &[SolutionRecord], f1_limit: &Rational) -> Option<SolutionRecord> {
    records
        .iter()
        .filter(|r| &r.image.f1 <= f1_limit)
        .min_by(|a, b| (&a.image.f2, &a.image.f1).cmp(&(&b.image.f2, &b.image.f1)))
        .cloned()
}

/// `(alpha (1 + 2 eps), alpha (1 + 2/eps))`-approximation for the budget
/// problem.
pub fn solve_budget_sweep(problem: &dyn BicriteriaProblem, query: &BudgetQuery) -> Result<BudgetSolution> {
    solve_budget_sweep_with(problem, query, false)
}

/// As [`solve_budget_sweep`], optionally evaluating grid points on the rayon
/// pool. The output does not depend on `parallel`.
pub fn solve_budget_sweep_with(
    problem: &dyn BicriteriaProblem,
    query: &BudgetQuery,
    parallel: bool,
) -> Result<BudgetSolution> {
    let alpha = problem.alpha();
    let range = index_range(&query.eps, &query.budget, &problem.bounds());
    let transcript = run_grid(problem, &query.eps, range, parallel)?;
    let (budget_factor, cost_factor) = FactorVariant::Grid.factors(query.eps.value(), &alpha);
    let limit = &budget_factor * &query.budget;
    match select_within(&transcript, &limit) {
        Some(record) => Ok(BudgetSolution {
            record,
            certificate: GuaranteeCertificate {
                alpha,
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

/// The sweep at `eps = 1`: a `(3 alpha, 3 alpha)`-approximation.
pub fn solve_budget_fixed(problem: &dyn BicriteriaProblem, budget: &Rational) -> Result<BudgetSolution> {
    let query = BudgetQuery::new(budget.clone(), Epsilon::one())?;
    let solution = solve_budget_sweep(problem, &query)?;
    debug_assert_eq!(solution.certificate.budget_factor, &int(3) * &problem.alpha());
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{exact_opt_budget, verify_budget};
    use crate::problems::fixtures;
    use crate::types::{rat, CostPair};

    fn bounds_with(lb2: i64, ub2: i64) -> Bounds {
        Bounds::new(int(1), int(1), int(lb2), int(ub2)).unwrap()
    }

    #[test]
    fn index_range_examples() {
        let one = Epsilon::one();
        assert_eq!(
            index_range(&one, &int(3), &bounds_with(2, 5)),
            IndexRange { i_min: -1, i_max: 1 }
        );
        assert_eq!(
            index_range(&one, &int(1), &bounds_with(1, 1)),
            IndexRange { i_min: 0, i_max: 0 }
        );
        let half = Epsilon::new(rat(1, 2)).unwrap();
        assert_eq!(
            index_range(&half, &int(2), &bounds_with(1, 4)),
            IndexRange { i_min: -4, i_max: 0 }
        );
    }

    #[test]
    fn example2_budget_three() {
        let ex2 = fixtures::example2_mst();
        let q = BudgetQuery::new(int(3), Epsilon::one()).unwrap();
        let sol = solve_budget_sweep(&ex2, &q).unwrap();
        let opt = exact_opt_budget(&ex2, &int(3)).unwrap().unwrap();
        assert_eq!(opt, int(3));
        assert!(sol.record.image.f1 <= int(9));
        assert!(sol.record.image.f2 <= int(9));
        assert!(verify_budget(&sol.record, &int(3), &int(1), &int(1), &opt));
        assert_eq!(sol.certificate.budget_factor, int(3));
        assert_eq!(sol.certificate.cost_factor, int(3));
        assert_eq!(sol.certificate.oracle_calls, 3);
        assert_eq!(sol.transcript.len(), 3);
    }

    #[test]
    fn example2_budget_four() {
        let ex2 = fixtures::example2_mst();
        let q = BudgetQuery::new(int(4), Epsilon::one()).unwrap();
        let sol = solve_budget_sweep(&ex2, &q).unwrap();
        assert_eq!(exact_opt_budget(&ex2, &int(4)).unwrap(), Some(int(2)));
        assert!(sol.record.image.f2 <= int(6));
        assert!(sol.record.image.f1 <= int(12));
    }

    #[test]
    fn single_solution_instance() {
        let p = fixtures::single_edge_mst(1, 1);
        for (b, e) in [(int(1), Epsilon::one()), (int(5), Epsilon::new(rat(1, 4)).unwrap())] {
            let sol = solve_budget_sweep(&p, &BudgetQuery::new(b, e).unwrap()).unwrap();
            assert_eq!(sol.record.image, CostPair::from_ints(1, 1));
        }
    }

    #[test]
    fn fixed_variant() {
        let ex1 = fixtures::example1_mst();
        let sol = solve_budget_fixed(&ex1, &int(2)).unwrap();
        assert_eq!(exact_opt_budget(&ex1, &int(2)).unwrap(), Some(int(4)));
        assert!(sol.record.image.f1 <= int(6));
        assert!(sol.record.image.f2 <= int(12));
        assert_eq!(
            (sol.certificate.budget_factor, sol.certificate.cost_factor),
            (int(3), int(3))
        );
    }

    #[test]
    fn infeasible_budget_reports_transcript() {
        let ex1 = fixtures::example1_mst();
        match solve_budget_fixed(&ex1, &rat(1, 10)) {
            Err(Error::NoCertificate { transcript }) => assert!(!transcript.is_empty()),
            other => panic!("expected NoCertificate, got {other:?}"),
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let ex1 = fixtures::example1_mst();
        let q = BudgetQuery::new(int(3), Epsilon::new(rat(1, 4)).unwrap()).unwrap();
        let a = solve_budget_sweep_with(&ex1, &q, false).unwrap();
        let b = solve_budget_sweep_with(&ex1, &q, true).unwrap();
        assert_eq!(a.record, b.record);
        assert_eq!(a.transcript, b.transcript);
    }

    #[test]
    fn rejects_nonpositive_budget() {
        assert!(BudgetQuery::new(int(0), Epsilon::one()).is_err());
    }
}
