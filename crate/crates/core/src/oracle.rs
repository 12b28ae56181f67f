//! Brute-force ground truth for small instances.
//!
//! Everything here enumerates the full feasible set, so it is only usable
//! within [`EnumerationCap`]. Tests use it to certify the approximation
//! algorithms independently of the weighted-sum oracles.

use crate::error::{Error, Result};
use crate::pareto::{filter_dominated, ParetoSet};
use crate::problem::BicriteriaProblem;
use crate::problems::graph::DisjointSets;
use crate::problems::{MinCutProblem, MstProblem, ShortestPathProblem, VertexCoverProblem};
use crate::types::{int, FactorVariant, Rational, SolutionRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCap {
    pub max_solutions: usize,
    pub max_nodes: usize,
}

impl Default for EnumerationCap {
    fn default() -> Self {
        EnumerationCap {
            max_solutions: 100_000,
            max_nodes: 12,
        }
    }
}

/// A problem whose feasible set can be listed exhaustively.
pub trait Enumerate: BicriteriaProblem {
    fn node_count(&self) -> usize;

    /// Every feasible solution exactly once, with its exact image.
    fn enumerate_all(&self, cap: &EnumerationCap) -> Result<Vec<SolutionRecord>>;
}

fn check_nodes(nodes: usize, cap: &EnumerationCap) -> Result<()> {
    if nodes > cap.max_nodes {
        return Err(Error::CapExceeded(format!(
            "{nodes} nodes exceeds the limit of {}",
            cap.max_nodes
        )));
    }
    Ok(())
}

struct Collector<'a> {
    problem: &'a dyn BicriteriaProblem,
    cap: usize,
    out: Vec<SolutionRecord>,
}

impl Collector<'_> {
    fn push(&mut self, mut token: Vec<usize>) -> Result<()> {
        if self.out.len() >= self.cap {
            return Err(Error::CapExceeded(format!("more than {} feasible solutions", self.cap)));
        }
        token.sort_unstable();
        let image = self.problem.evaluate(&token)?;
        self.out.push(SolutionRecord::new(token, image));
        Ok(())
    }
}

impl Enumerate for MstProblem {
    fn node_count(&self) -> usize {
        self.graph.node_count
    }

    /// Edge-by-edge include/exclude search. An edge is only included when it
    /// joins two components, and a branch is cut once too few edges remain.
    fn enumerate_all(&self, cap: &EnumerationCap) -> Result<Vec<SolutionRecord>> {
        check_nodes(self.graph.node_count, cap)?;
        let need = self.graph.node_count.saturating_sub(1);
        let mut collector = Collector {
            problem: self,
            cap: cap.max_solutions,
            out: Vec::new(),
        };
        let mut chosen = Vec::with_capacity(need);
        let dsu = DisjointSets::new(self.graph.node_count);
        self.grow(0, need, &mut chosen, dsu, &mut collector)?;
        Ok(collector.out)
    }
}

impl MstProblem {
    fn grow(
        &self,
        next: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        dsu: DisjointSets,
        collector: &mut Collector<'_>,
    ) -> Result<()> {
        if chosen.len() == need {
            return collector.push(chosen.clone());
        }
        let remaining = self.graph.edges.len() - next;
        if chosen.len() + remaining < need {
            return Ok(());
        }
        let e = &self.graph.edges[next];
        let mut with = dsu.clone();
        if with.union(e.u, e.v) {
            chosen.push(next);
            self.grow(next + 1, need, chosen, with, collector)?;
            chosen.pop();
        }
        self.grow(next + 1, need, chosen, dsu, collector)
    }
}

impl Enumerate for ShortestPathProblem {
    fn node_count(&self) -> usize {
        self.graph.node_count
    }

    /// Depth-first search over simple s-t paths.
    fn enumerate_all(&self, cap: &EnumerationCap) -> Result<Vec<SolutionRecord>> {
        check_nodes(self.graph.node_count, cap)?;
        let adj = self.graph.adjacency();
        let mut collector = Collector {
            problem: self,
            cap: cap.max_solutions,
            out: Vec::new(),
        };
        let mut on_path = vec![false; self.graph.node_count];
        on_path[self.source] = true;
        let mut edges = Vec::new();
        self.extend(self.source, &adj, &mut on_path, &mut edges, &mut collector)?;
        Ok(collector.out)
    }
}

impl ShortestPathProblem {
    fn extend(
        &self,
        at: usize,
        adj: &[Vec<usize>],
        on_path: &mut [bool],
        edges: &mut Vec<usize>,
        collector: &mut Collector<'_>,
    ) -> Result<()> {
        if at == self.sink {
            return collector.push(edges.clone());
        }
        for &ei in &adj[at] {
            let next = self.graph.edges[ei].other(at);
            if on_path[next] {
                continue;
            }
            on_path[next] = true;
            edges.push(ei);
            self.extend(next, adj, on_path, edges, collector)?;
            edges.pop();
            on_path[next] = false;
        }
        Ok(())
    }
}

impl Enumerate for MinCutProblem {
    fn node_count(&self) -> usize {
        self.graph.node_count
    }

    /// The source is always on the source side and the sink never is; every
    /// subset of the other nodes is enumerated.
    fn enumerate_all(&self, cap: &EnumerationCap) -> Result<Vec<SolutionRecord>> {
        check_nodes(self.graph.node_count, cap)?;
        let others: Vec<usize> = (0..self.graph.node_count)
            .filter(|&v| v != self.source && v != self.sink)
            .collect();
        let mut collector = Collector {
            problem: self,
            cap: cap.max_solutions,
            out: Vec::new(),
        };
        for mask in 0u64..(1u64 << others.len()) {
            let mut side = vec![self.source];
            side.extend(
                others
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &v)| v),
            );
            collector.push(side)?;
        }
        Ok(collector.out)
    }
}

impl Enumerate for VertexCoverProblem {
    fn node_count(&self) -> usize {
        self.graph.node_count
    }

    fn enumerate_all(&self, cap: &EnumerationCap) -> Result<Vec<SolutionRecord>> {
        check_nodes(self.graph.node_count, cap)?;
        let n = self.graph.node_count;
        let mut collector = Collector {
            problem: self,
            cap: cap.max_solutions,
            out: Vec::new(),
        };
        for mask in 0u64..(1u64 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if self.graph.is_cover(&set) {
                collector.push(set)?;
            }
        }
        Ok(collector.out)
    }
}

/// Minimum `f2` over solutions with `f1 <= budget`, or `None` when no
/// solution fits the budget.
pub fn exact_opt_budget(problem: &dyn Enumerate, budget: &Rational) -> Result<Option<Rational>> {
    let all = problem.enumerate_all(&EnumerationCap::default())?;
    Ok(opt_within_budget(&all, budget))
}

/// Same as [`exact_opt_budget`] on an already enumerated solution list.
pub fn opt_within_budget(all: &[SolutionRecord], budget: &Rational) -> Option<Rational> {
    all.iter()
        .filter(|r| &r.image.f1 <= budget)
        .map(|r| r.image.f2.clone())
        .min()
}

/// The exact Pareto curve: the nondominated enumerated solutions.
pub fn exact_pareto(problem: &dyn Enumerate) -> Result<ParetoSet> {
    let all = problem.enumerate_all(&EnumerationCap::default())?;
    Ok(ParetoSet::new(filter_dominated(&all), int(1), int(1)))
}

/// `f1 <= alpha (1 + 2 eps) B` and `f2 <= alpha (1 + 2/eps) opt`.
pub fn verify_budget(
    record: &SolutionRecord,
    budget: &Rational,
    eps: &Rational,
    alpha: &Rational,
    opt: &Rational,
) -> bool {
    verify_budget_variant(record, budget, eps, alpha, opt, FactorVariant::Grid)
}

pub fn verify_budget_variant(
    record: &SolutionRecord,
    budget: &Rational,
    eps: &Rational,
    alpha: &Rational,
    opt: &Rational,
    variant: FactorVariant,
) -> bool {
    let (budget_factor, cost_factor) = variant.factors(eps, alpha);
    verify_budget_factors(record, budget, opt, &budget_factor, &cost_factor)
}

pub fn verify_budget_factors(
    record: &SolutionRecord,
    budget: &Rational,
    opt: &Rational,
    budget_factor: &Rational,
    cost_factor: &Rational,
) -> bool {
    record.image.f1 <= budget_factor * budget && record.image.f2 <= cost_factor * opt
}

/// Whether every record of `all` is `(a, b)`-covered by some record of
/// `approx`.
pub fn verify_pareto_coverage(approx: &[SolutionRecord], all: &[SolutionRecord], a: &Rational, b: &Rational) -> bool {
    all.iter().all(|x| {
        approx
            .iter()
            .any(|y| y.image.f1 <= a * &x.image.f1 && y.image.f2 <= b * &x.image.f2)
    })
}
