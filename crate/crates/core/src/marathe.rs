//! The earlier parametric-search algorithm of Marathe et al. for budgeted
//! bicriteria problems, implemented as published, together with the two
//! instances on which it fails.
//!
//! The algorithm scalarizes with `(D/B) f1 + f2`, calls the optimum `h(D)`,
//! and binary searches an integer `D'` in `[0, eps UB(2)]` with
//! `h(D')/D' > alpha (1 + eps)` and `h(D'+1)/(D'+1) <= alpha (1 + eps)`.
//! The search assumes `h(D)/D` is monotone, which fails for approximate
//! oracles, and the stopping rule can miss feasible budgets even for exact
//! ones.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::oracle::exact_opt_budget;
use crate::problem::BicriteriaProblem;
use crate::problems::{fixtures, AdversarialOracle, SelectionPolicy};
use crate::types::{int, rat, Rational, SolutionRecord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaratheParams {
    pub budget: Rational,
    pub eps: Rational,
    pub ub2: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub d: Rational,
    pub h: Rational,
    pub record: SolutionRecord,
}

impl Probe {
    /// `h(D) / D`, or `None` for `D = 0`, read as `+inf`.
    pub fn ratio(&self) -> Option<Rational> {
        (!self.d.is_zero()).then(|| &self.h / &self.d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaratheOutcome {
    Solution(Box<SolutionRecord>),
    NoSolution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaratheTrace {
    pub params: MaratheParams,
    /// Every `h` evaluation, in the order made.
    pub tested: Vec<Probe>,
    pub outcome: MaratheOutcome,
    /// Brute-force `OPT(B)` when the reproduction computed it.
    pub opt_budget: Option<Rational>,
}

impl MaratheTrace {
    pub fn probe(&self, d: &Rational) -> Option<&Probe> {
        self.tested.iter().find(|p| &p.d == d)
    }

    pub fn ratio(&self, d: &Rational) -> Option<Rational> {
        self.probe(d).and_then(Probe::ratio)
    }
}

/// `h(D)`: the oracle's value under `(D/B) f1 + f2`. For `D = 0` this is
/// the oracle run on `f2` alone.
pub fn h_value(problem: &dyn BicriteriaProblem, d: &Rational, budget: &Rational) -> Result<Probe> {
    if d.is_negative() || !budget.is_positive() {
        return Err(Error::invalid(format!(
            "need D >= 0 and B > 0, got D = {d}, B = {budget}"
        )));
    }
    let c1 = d / budget;
    let record = problem.solve_scalarized(&c1, &int(1))?;
    Ok(Probe {
        d: d.clone(),
        h: record.image.scalarized(&c1, &int(1)),
        record,
    })
}

struct Evaluator<'a> {
    problem: &'a dyn BicriteriaProblem,
    budget: &'a Rational,
    cache: BTreeMap<i64, Probe>,
    tested: Vec<Probe>,
}

impl Evaluator<'_> {
    fn at(&mut self, d: i64) -> Result<Probe> {
        if let Some(p) = self.cache.get(&d) {
            return Ok(p.clone());
        }
        let p = h_value(self.problem, &int(d), self.budget)?;
        self.cache.insert(d, p.clone());
        self.tested.push(p.clone());
        Ok(p)
    }

    /// `h(D)/D > threshold`, with `h(0)/0 = +inf`.
    fn above(&mut self, d: i64, threshold: &Rational) -> Result<bool> {
        Ok(self.at(d)?.ratio().is_none_or(|r| &r > threshold))
    }
}

/// Runs the published search. `eps` may exceed 1.
pub fn marathe_search(
    problem: &dyn BicriteriaProblem,
    budget: &Rational,
    eps: &Rational,
    ub2: &Rational,
) -> Result<MaratheTrace> {
    if !eps.is_positive() || !ub2.is_positive() {
        return Err(Error::invalid(format!(
            "need eps > 0 and UB(2) > 0, got {eps} and {ub2}"
        )));
    }
    let threshold = problem.alpha() * (int(1) + eps);
    let top = (eps * ub2)
        .floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::invalid("search range too large"))?;
    let mut eval = Evaluator {
        problem,
        budget,
        cache: BTreeMap::new(),
        tested: Vec::new(),
    };
    let (mut lo, mut hi) = (0i64, top);
    let mut outcome = MaratheOutcome::NoSolution;
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        if eval.above(mid, &threshold)? {
            if !eval.above(mid + 1, &threshold)? {
                outcome = MaratheOutcome::Solution(Box::new(eval.at(mid + 1)?.record));
                break;
            }
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    Ok(MaratheTrace {
        params: MaratheParams {
            budget: budget.clone(),
            eps: eps.clone(),
            ub2: ub2.clone(),
        },
        tested: eval.tested,
        outcome,
        opt_budget: None,
    })
}

fn example1_trace(problem: &dyn BicriteriaProblem) -> Result<MaratheTrace> {
    let budget = int(2);
    let mut trace = marathe_search(problem, &budget, &int(1), &int(4))?;
    for d in [3, 4] {
        if trace.probe(&int(d)).is_none() {
            trace.tested.push(h_value(problem, &int(d), &budget)?);
        }
    }
    Ok(trace)
}

/// Example 1 under a 5/4-approximate oracle that answers `(2,4)` for
/// `D = 3` and `(4,2)` for `D = 4`: `h(3)/3 = 7/3 < 5/2 = h(4)/4`.
pub fn reproduce_example1() -> Result<MaratheTrace> {
    // D/B = 3/2 and 2 correspond to gamma = 2/3 and 1/2.
    let script = vec![(rat(2, 3), vec![1, 2]), (rat(1, 2), vec![0, 2])];
    let oracle = AdversarialOracle::new(fixtures::example1_mst(), rat(5, 4), SelectionPolicy::Scripted(script))?;
    let trace = example1_trace(&oracle)?;
    let (r3, r4) = (trace.ratio(&int(3)), trace.ratio(&int(4)));
    if r3 != Some(rat(7, 3)) || r4 != Some(rat(5, 2)) {
        return Err(Error::invalid(format!(
            "unexpected ratios h(3)/3 = {r3:?}, h(4)/4 = {r4:?}"
        )));
    }
    Ok(trace)
}

/// The same probes with the exact oracle, where `h(D)/D` is monotone.
pub fn example1_exact_counterpart() -> Result<MaratheTrace> {
    example1_trace(&fixtures::example1_mst())
}

/// Example 2 with the exact oracle, `B = 3`, `eps = 2/3`: the search
/// reports no solution although two trees with `f1 = 3` exist.
pub fn reproduce_example2() -> Result<MaratheTrace> {
    let problem = fixtures::example2_mst();
    let budget = int(3);
    let mut trace = marathe_search(&problem, &budget, &rat(2, 3), &int(3))?;
    trace.opt_budget = exact_opt_budget(&problem, &budget)?;
    if trace.outcome != MaratheOutcome::NoSolution || trace.opt_budget != Some(int(3)) {
        return Err(Error::invalid("example 2 did not reproduce"));
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_values_on_example1() {
        let ex1 = fixtures::example1_mst();
        let p = h_value(&ex1, &int(3), &int(2)).unwrap();
        assert_eq!((p.h.clone(), p.record.token.clone()), (int(7), vec![1, 2]));
        assert_eq!(h_value(&ex1, &int(4), &int(2)).unwrap().h, int(8));
        assert_eq!(h_value(&ex1, &int(0), &int(2)).unwrap().h, int(2));
    }

    #[test]
    fn example1_reproduces() {
        let trace = reproduce_example1().unwrap();
        assert_eq!(trace.probe(&int(3)).unwrap().h, int(7));
        assert_eq!(trace.probe(&int(4)).unwrap().h, int(10));
        assert!(trace.ratio(&int(3)).unwrap() < trace.ratio(&int(4)).unwrap());

        let exact = example1_exact_counterpart().unwrap();
        assert_eq!(exact.ratio(&int(3)), Some(rat(7, 3)));
        assert_eq!(exact.ratio(&int(4)), Some(int(2)));
    }

    #[test]
    fn example2_reproduces() {
        let trace = reproduce_example2().unwrap();
        assert_eq!(trace.outcome, MaratheOutcome::NoSolution);
        for p in &trace.tested {
            assert_eq!(p.h, rat(4, 3) * &p.d + int(2));
        }
    }

    #[test]
    fn zero_is_always_above() {
        let trace = marathe_search(&fixtures::example2_mst(), &int(3), &rat(1, 10), &int(3)).unwrap();
        // Range {0}: D' = 0 holds, then h(1)/1 = 10/3 > 11/10.
        assert_eq!(trace.outcome, MaratheOutcome::NoSolution);
        assert_eq!(trace.tested.len(), 2);
    }

    #[test]
    fn trace_values_match_tokens() {
        let trace = reproduce_example1().unwrap();
        for p in &trace.tested {
            let c1 = &p.d / &trace.params.budget;
            assert_eq!(p.h, p.record.image.scalarized(&c1, &int(1)));
        }
    }
}
