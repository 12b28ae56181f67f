//! Approximate Pareto curves from weighted-sum oracles.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::problem::{BicriteriaProblem, ParametricProblem};
use crate::sweep::{run_grid, IndexRange};
use crate::types::{dominates, int, Bounds, Epsilon, FactorVariant, Rational, SolutionRecord, Weight};

/// Mutually nondominated records, sorted by `f1`, with the `(a, b)` factors
/// they are guaranteed to cover every feasible solution by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParetoSet {
    pub records: Vec<SolutionRecord>,
    pub factor1: Rational,
    pub factor2: Rational,
    /// Oracle calls spent building the set. For the parametric variant this
    /// counts the pieces returned by the parametric algorithm.
    pub oracle_calls: usize,
}

impl ParetoSet {
    /// Sorts `records` by `(f1, f2)`. The caller is responsible for them
    /// being nondominated.
    pub fn new(mut records: Vec<SolutionRecord>, factor1: Rational, factor2: Rational) -> Self {
        debug_assert!(factor1 >= Rational::one() && factor2 >= Rational::one());
        records.sort_by(|a, b| (&a.image.f1, &a.image.f2).cmp(&(&b.image.f1, &b.image.f2)));
        ParetoSet {
            records,
            factor1,
            factor2,
            oracle_calls: 0,
        }
    }

    pub fn with_calls(mut self, oracle_calls: usize) -> Self {
        self.oracle_calls = oracle_calls;
        self
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Drops dominated records and repeated images, keeping the first of each
/// image and the input order otherwise.
pub fn filter_dominated(records: &[SolutionRecord]) -> Vec<SolutionRecord> {
    records
        .iter()
        .enumerate()
        .filter(|(i, r)| {
            !records
                .iter()
                .enumerate()
                .any(|(j, other)| dominates(&other.image, &r.image) || (j < *i && other.image == r.image))
        })
        .map(|(_, r)| r.clone())
        .collect()
}

/// Grid exponents bracketing `[eps LB(1) / UB(2), eps UB(1) / LB(2)]`.
pub fn pareto_index_range(eps: &Epsilon, bounds: &Bounds) -> IndexRange {
    let e = eps.value();
    IndexRange::bracketing(eps, &(e * &bounds.lb1 / &bounds.ub2), &(e * &bounds.ub1 / &bounds.lb2))
}

/// `(alpha (1 + 2 eps), alpha (1 + 2/eps))`-approximate Pareto curve: the
/// nondominated part of the oracle's answers over the grid.
pub fn approximate_pareto(problem: &dyn BicriteriaProblem, eps: &Epsilon) -> Result<ParetoSet> {
    approximate_pareto_with(problem, eps, false)
}

pub fn approximate_pareto_with(problem: &dyn BicriteriaProblem, eps: &Epsilon, parallel: bool) -> Result<ParetoSet> {
    let range = pareto_index_range(eps, &problem.bounds());
    let records = run_grid(problem, eps, range, parallel)?;
    let (factor1, factor2) = FactorVariant::Grid.factors(eps.value(), &problem.alpha());
    Ok(ParetoSet::new(filter_dominated(&records), factor1, factor2).with_calls(records.len()))
}

/// The solutions of a parametric algorithm over all `gamma > 0`, which form a
/// `(alpha (1 + eps), alpha (1 + 1/eps))`-approximate Pareto curve for every
/// `eps`. Only the recorded factors depend on `eps`.
pub fn pareto_from_parametric(problem: &dyn ParametricProblem, eps: &Epsilon) -> Result<ParetoSet> {
    let pieces = problem.parametric_all()?;
    if pieces.is_empty() {
        return Err(Error::NoFeasibleSolution);
    }
    let records: Vec<_> = pieces.iter().map(|p| p.record.clone()).collect();
    let (factor1, factor2) = FactorVariant::Parametric.factors(eps.value(), &problem.alpha());
    Ok(ParetoSet::new(filter_dominated(&records), factor1, factor2).with_calls(pieces.len()))
}

/// Records at the two ends of the curve when objective values may be zero.
///
/// A weight above `alpha UB(1) / LB(2)` makes any solution with `f2 > 0`
/// worse than one with `f2 = 0`, so the first slot holds a record with
/// `f2 = 0` whenever such a solution exists; symmetrically for the second
/// slot below `LB(1) / (alpha UB(2))`. A slot is `None` when the returned
/// record does not have the zero component.
pub fn boundary_solutions(
    problem: &dyn BicriteriaProblem,
    bounds: &Bounds,
) -> Result<(Option<SolutionRecord>, Option<SolutionRecord>)> {
    let twice_alpha = int(2) * problem.alpha();
    let high = Weight::new(&twice_alpha * &bounds.ub1 / &bounds.lb2)?;
    let low = Weight::new(&bounds.lb1 / (&twice_alpha * &bounds.ub2))?;
    let zero_f2 = problem.solve_weighted_sum(&high)?;
    let zero_f1 = problem.solve_weighted_sum(&low)?;
    Ok((
        Some(zero_f2).filter(|r| r.image.f2.is_zero()),
        Some(zero_f1).filter(|r| r.image.f1.is_zero()),
    ))
}

/// The grid curve plus the two boundary records, filtered.
pub fn extended_pareto(problem: &dyn BicriteriaProblem, eps: &Epsilon) -> Result<ParetoSet> {
    let bounds = problem.bounds();
    let grid = approximate_pareto(problem, eps)?;
    let (high, low) = boundary_solutions(problem, &bounds)?;
    let mut records = grid.records;
    records.extend(high);
    records.extend(low);
    Ok(ParetoSet::new(filter_dominated(&records), grid.factor1, grid.factor2).with_calls(grid.oracle_calls + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{verify_pareto_coverage, Enumerate, EnumerationCap};
    use crate::problems::fixtures;
    use crate::types::{rat, CostPair};

    fn rec(f1: i64, f2: i64) -> SolutionRecord {
        SolutionRecord::new(vec![], CostPair::from_ints(f1, f2))
    }

    fn images(set: &ParetoSet) -> Vec<CostPair> {
        set.records.iter().map(|r| r.image.clone()).collect()
    }

    #[test]
    fn filter_examples() {
        let kept = filter_dominated(&[rec(4, 2), rec(2, 4), rec(4, 4)]);
        assert_eq!(kept, vec![rec(4, 2), rec(2, 4)]);
        assert!(filter_dominated(&[]).is_empty());
        let dup = filter_dominated(&[
            SolutionRecord::new(vec![0], CostPair::from_ints(3, 3)),
            SolutionRecord::new(vec![1], CostPair::from_ints(3, 3)),
        ]);
        assert_eq!(dup.len(), 1);
        assert_eq!(dup[0].token, vec![0]);
    }

    #[test]
    fn index_range_examples() {
        let b = Bounds::new(int(2), int(4), int(2), int(4)).unwrap();
        assert_eq!(
            pareto_index_range(&Epsilon::one(), &b),
            IndexRange { i_min: -1, i_max: 1 }
        );
        let unit = Bounds::new(int(1), int(1), int(1), int(1)).unwrap();
        assert_eq!(
            pareto_index_range(&Epsilon::one(), &unit),
            IndexRange { i_min: 0, i_max: 0 }
        );
        let half = pareto_index_range(&Epsilon::new(rat(1, 2)).unwrap(), &b);
        assert!(half.len() > 3);
    }

    #[test]
    fn grid_curve_covers_examples() {
        for p in [fixtures::example1_mst(), fixtures::example2_mst()] {
            let set = approximate_pareto(&p, &Epsilon::one()).unwrap();
            let all = p.enumerate_all(&EnumerationCap::default()).unwrap();
            assert!(verify_pareto_coverage(&set.records, &all, &int(3), &int(3)));
            assert_eq!(set.oracle_calls, pareto_index_range(&Epsilon::one(), &p.bounds()).len());
        }
        let ex2 = approximate_pareto(&fixtures::example2_mst(), &Epsilon::one()).unwrap();
        for image in images(&ex2) {
            assert!(image == CostPair::from_ints(4, 2) || image == CostPair::from_ints(3, 3));
        }
    }

    #[test]
    fn single_solution_curve() {
        let set = approximate_pareto(&fixtures::single_edge_mst(2, 5), &Epsilon::one()).unwrap();
        assert_eq!(images(&set), vec![CostPair::from_ints(2, 5)]);
    }

    #[test]
    fn parametric_curves() {
        let ex1 = pareto_from_parametric(&fixtures::example1_mst(), &Epsilon::one()).unwrap();
        assert_eq!(images(&ex1), vec![CostPair::from_ints(2, 4), CostPair::from_ints(4, 2)]);
        assert_eq!((ex1.factor1.clone(), ex1.factor2.clone()), (int(2), int(2)));
        let ex2 = pareto_from_parametric(&fixtures::example2_mst(), &Epsilon::one()).unwrap();
        assert_eq!(images(&ex2), vec![CostPair::from_ints(3, 3), CostPair::from_ints(4, 2)]);
        let single = pareto_from_parametric(&fixtures::single_edge_mst(1, 1), &Epsilon::one()).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn boundary_records_are_exact() {
        let p = fixtures::zero_boundary_mst(false);
        let (high, low) = boundary_solutions(&p, &p.bounds()).unwrap();
        assert_eq!(high.unwrap().image, CostPair::from_ints(1, 0));
        assert_eq!(low.unwrap().image, CostPair::from_ints(0, 1));

        let ex1 = fixtures::example1_mst();
        assert_eq!(boundary_solutions(&ex1, &ex1.bounds()).unwrap(), (None, None));
    }

    #[test]
    fn extended_curve() {
        let p = fixtures::zero_boundary_mst(true);
        let set = extended_pareto(&p, &Epsilon::one()).unwrap();
        let found = images(&set);
        assert!(found.contains(&CostPair::from_ints(1, 0)));
        assert!(found.contains(&CostPair::from_ints(0, 1)));
        let all = p.enumerate_all(&EnumerationCap::default()).unwrap();
        assert_eq!(all.len(), 3);
        assert!(verify_pareto_coverage(&set.records, &all, &int(3), &int(3)));

        let ex1 = fixtures::example1_mst();
        let plain = approximate_pareto(&ex1, &Epsilon::one()).unwrap();
        assert_eq!(extended_pareto(&ex1, &Epsilon::one()).unwrap().records, plain.records);
    }
}
