//! An `alpha`-approximate weighted-sum oracle that answers as badly as its
//! guarantee allows. Used to reproduce failures that only appear with
//! approximate oracles.

use std::cmp::Ordering;

use num_traits::One;

use crate::error::{Error, Result};
use crate::oracle::{Enumerate, EnumerationCap};
use crate::problem::{check_scalarization, implied_weight, BicriteriaProblem};
use crate::types::{Bounds, CostPair, Rational, SolutionRecord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelectionPolicy {
    /// Among all solutions within `alpha` of the optimum, return the one with
    /// the largest `f1`, then the largest `f2`, then the first enumerated.
    WorstByF1,
    /// Fixed answers keyed by `gamma`; other weights use `WorstByF1`.
    Scripted(Vec<(Rational, Vec<usize>)>),
}

#[derive(Clone, Debug)]
pub struct AdversarialOracle<P> {
    inner: P,
    alpha: Rational,
    policy: SelectionPolicy,
    candidates: Vec<SolutionRecord>,
}

impl<P: Enumerate> AdversarialOracle<P> {
    pub fn new(inner: P, alpha: Rational, policy: SelectionPolicy) -> Result<Self> {
        if alpha < Rational::one() {
            return Err(Error::invalid(format!("alpha must be at least 1, got {alpha}")));
        }
        let candidates = inner.enumerate_all(&EnumerationCap::default())?;
        if candidates.is_empty() {
            return Err(Error::NoFeasibleSolution);
        }
        if let SelectionPolicy::Scripted(table) = &policy {
            for (_, token) in table {
                inner.evaluate(token)?;
            }
        }
        Ok(AdversarialOracle {
            inner,
            alpha,
            policy,
            candidates,
        })
    }

    pub fn inner(&self) -> &P {
        &self.inner
    }
}

impl<P: Enumerate> BicriteriaProblem for AdversarialOracle<P> {
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    fn alpha(&self) -> Rational {
        self.alpha.clone()
    }

    fn relaxed(&self) -> bool {
        self.inner.relaxed()
    }

    fn evaluate(&self, token: &[usize]) -> Result<CostPair> {
        self.inner.evaluate(token)
    }

    fn bounds(&self) -> Bounds {
        self.inner.bounds()
    }

    fn solve_scalarized(&self, c1: &Rational, c2: &Rational) -> Result<SolutionRecord> {
        check_scalarization(c1, c2)?;
        let gamma = implied_weight(c1, c2);
        let value = |r: &SolutionRecord| r.image.scalarized(c1, c2);
        let optimum = self
            .candidates
            .iter()
            .map(value)
            .min()
            .ok_or(Error::NoFeasibleSolution)?;
        let limit = &self.alpha * &optimum;

        if let (SelectionPolicy::Scripted(table), Some(g)) = (&self.policy, &gamma) {
            if let Some((_, token)) = table.iter().find(|(key, _)| key == g.value()) {
                let image = self.inner.evaluate(token)?;
                if image.scalarized(c1, c2) > limit {
                    return Err(Error::invalid(format!(
                        "scripted answer at gamma = {g} violates the alpha guarantee"
                    )));
                }
                return Ok(SolutionRecord::new(token.clone(), image).with_weight(gamma));
            }
        }

        let worst = self
            .candidates
            .iter()
            .filter(|r| value(r) <= limit)
            .reduce(
                |best, r| match r.image.f1.cmp(&best.image.f1).then(r.image.f2.cmp(&best.image.f2)) {
                    Ordering::Greater => r,
                    _ => best,
                },
            )
            .expect("the optimum itself is within the limit");
        Ok(SolutionRecord::new(worst.token.clone(), worst.image.clone()).with_weight(gamma))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::fixtures;
    use crate::types::{int, rat, Weight};

    fn w(n: i64, d: i64) -> Weight {
        Weight::new(rat(n, d)).unwrap()
    }

    #[test]
    fn worst_legal_answer() {
        let adv = AdversarialOracle::new(fixtures::example1_mst(), rat(5, 4), SelectionPolicy::WorstByF1).unwrap();
        assert_eq!(adv.alpha(), rat(5, 4));
        // f1 + 2 f2: x1 = 8 is optimal, x2 = 10 <= 10 is legal, x3 = 12 is not.
        assert_eq!(
            adv.solve_weighted_sum(&w(2, 1)).unwrap().image,
            CostPair::from_ints(4, 2)
        );
        // gamma = 1/2 is objective 2 f1 + f2 scaled; x2 = 4 optimal, x1 = 5 <= 5 legal.
        assert_eq!(
            adv.solve_weighted_sum(&w(1, 2)).unwrap().image,
            CostPair::from_ints(4, 2)
        );
    }

    #[test]
    fn alpha_one_matches_exact_values() {
        let exact = fixtures::example1_mst();
        let adv = AdversarialOracle::new(exact.clone(), int(1), SelectionPolicy::WorstByF1).unwrap();
        for (n, d) in [(1, 3), (1, 1), (3, 2), (5, 1)] {
            let g = rat(n, d);
            let a = adv.solve_weighted_sum(&w(n, d)).unwrap().image.weighted(&g);
            let b = exact.solve_weighted_sum(&w(n, d)).unwrap().image.weighted(&g);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn scripted_answers_are_checked() {
        // x2 = edges {1, 2} has image (2, 4).
        let table = vec![(rat(2, 3), vec![1, 2]), (rat(1, 2), vec![0, 2])];
        let adv =
            AdversarialOracle::new(fixtures::example1_mst(), rat(5, 4), SelectionPolicy::Scripted(table)).unwrap();
        assert_eq!(
            adv.solve_weighted_sum(&w(2, 3)).unwrap().image,
            CostPair::from_ints(2, 4)
        );
        assert_eq!(
            adv.solve_weighted_sum(&w(1, 2)).unwrap().image,
            CostPair::from_ints(4, 2)
        );

        // x3 = (4,4) at gamma = 1/2: value 6 > (5/4) * 4.
        let illegal = vec![(rat(1, 2), vec![0, 1])];
        let adv =
            AdversarialOracle::new(fixtures::example1_mst(), rat(5, 4), SelectionPolicy::Scripted(illegal)).unwrap();
        assert!(adv.solve_weighted_sum(&w(1, 2)).is_err());
    }

    #[test]
    fn rejects_alpha_below_one() {
        assert!(AdversarialOracle::new(fixtures::example1_mst(), rat(1, 2), SelectionPolicy::WorstByF1).is_err());
    }
}
