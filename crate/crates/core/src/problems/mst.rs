//! Bicriteria minimum spanning tree with Kruskal as the exact weighted-sum
//! oracle.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::problem::{
    check_scalarization, critical_gamma, implied_weight, scalar_comparator, BicriteriaProblem, Comparator, LinearValue,
    ParametricPiece, ParametricProblem,
};
use crate::problems::graph::{merge_sort_by, BiweightedGraph, DisjointSets};
use crate::problems::{check_positivity, edge_bounds};
use crate::types::{int, Bounds, CostPair, Rational, SolutionRecord, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MstProblem {
    pub graph: BiweightedGraph,
    pub relaxed: bool,
}

impl MstProblem {
    pub fn new(graph: BiweightedGraph, relaxed: bool) -> Result<Self> {
        check_positivity(&graph, relaxed)?;
        if !relaxed && graph.node_count < 2 {
            return Err(Error::validation("nodes", "a spanning tree needs at least two nodes"));
        }
        if !graph.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(MstProblem { graph, relaxed })
    }

    /// Kruskal with every weight comparison routed through `cmp`. Ties keep
    /// edge index order.
    pub fn kruskal(&self, cmp: &mut Comparator<'_>) -> Result<Vec<usize>> {
        let weights: Vec<LinearValue> = self.graph.edges.iter().map(|e| LinearValue::from_costs(&e.w)).collect();
        let order: Vec<usize> = (0..weights.len()).collect();
        let sorted = merge_sort_by(&order, &mut |&a: &usize, &b: &usize| cmp(&weights[a], &weights[b]))?;
        let mut dsu = DisjointSets::new(self.graph.node_count);
        let mut tree = Vec::with_capacity(self.graph.node_count.saturating_sub(1));
        for idx in sorted {
            let e = &self.graph.edges[idx];
            if dsu.union(e.u, e.v) {
                tree.push(idx);
            }
        }
        if tree.len() + 1 != self.graph.node_count && self.graph.node_count > 0 {
            return Err(Error::DisconnectedGraph);
        }
        tree.sort_unstable();
        Ok(tree)
    }

    /// Exact minimum spanning tree under `w1 + gamma * w2`.
    pub fn mst_oracle(&self, gamma: &Weight) -> Result<SolutionRecord> {
        self.solve_weighted_sum(gamma)
    }
}

impl BicriteriaProblem for MstProblem {
    fn kind(&self) -> &'static str {
        "mst"
    }

    fn alpha(&self) -> Rational {
        Rational::one()
    }

    fn relaxed(&self) -> bool {
        self.relaxed
    }

    fn evaluate(&self, token: &[usize]) -> Result<CostPair> {
        let n = self.graph.node_count;
        if token.len() + 1 != n.max(1) {
            return Err(Error::InfeasibleToken(format!(
                "a spanning tree on {n} nodes has {} edges, got {}",
                n.saturating_sub(1),
                token.len()
            )));
        }
        let mut dsu = DisjointSets::new(n);
        let mut seen = vec![false; self.graph.edges.len()];
        for &idx in token {
            let e = self
                .graph
                .edges
                .get(idx)
                .ok_or_else(|| Error::InfeasibleToken(format!("edge index {idx} out of range")))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::InfeasibleToken(format!("edge {idx} repeated")));
            }
            if !dsu.union(e.u, e.v) {
                return Err(Error::InfeasibleToken("edges contain a cycle".into()));
            }
        }
        Ok(self.graph.edge_costs(token))
    }

    fn bounds(&self) -> Bounds {
        let tree_edges = self.graph.node_count.saturating_sub(1).max(1);
        let multiplier = if self.relaxed { 1 } else { tree_edges as i64 };
        edge_bounds(&self.graph, &int(multiplier))
    }

    fn solve_scalarized(&self, c1: &Rational, c2: &Rational) -> Result<SolutionRecord> {
        check_scalarization(c1, c2)?;
        let mut cmp = scalar_comparator(c1.clone(), c2.clone());
        let token = self.kruskal(&mut cmp)?;
        let image = self.graph.edge_costs(&token);
        Ok(SolutionRecord::new(token, image).with_weight(implied_weight(c1, c2)))
    }
}

impl ParametricProblem for MstProblem {
    fn parametric_run(&self, cmp: &mut Comparator<'_>) -> Result<Vec<usize>> {
        self.kruskal(cmp)
    }

    fn parametric_all(&self) -> Result<Vec<ParametricPiece>> {
        mst_parametric_all(self)
    }
}

/// Solutions for every `gamma > 0`.
///
/// The relative order of two edges can only change at their critical value,
/// so Kruskal's output is constant between consecutive pairwise critical
/// values. The oracle runs once inside each such open interval and once
/// beyond each extreme; consecutive identical trees are merged.
pub fn mst_parametric_all(problem: &MstProblem) -> Result<Vec<ParametricPiece>> {
    let lines: Vec<LinearValue> = problem
        .graph
        .edges
        .iter()
        .map(|e| LinearValue::from_costs(&e.w))
        .collect();
    let mut breakpoints = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(g) = critical_gamma(&lines[i], &lines[j]) {
                if g.is_positive() {
                    breakpoints.push(g);
                }
            }
        }
    }
    breakpoints.sort();
    breakpoints.dedup();
    pieces_from_breakpoints(problem, &breakpoints)
}

/// Solves once strictly inside every interval cut out by `breakpoints` and
/// assembles the pieces.
pub(crate) fn pieces_from_breakpoints(
    problem: &dyn BicriteriaProblem,
    breakpoints: &[Rational],
) -> Result<Vec<ParametricPiece>> {
    let two = int(2);
    let mut samples = Vec::with_capacity(breakpoints.len() + 1);
    match (breakpoints.first(), breakpoints.last()) {
        (Some(first), Some(last)) => {
            samples.push(first / &two);
            for w in breakpoints.windows(2) {
                samples.push((&w[0] + &w[1]) / &two);
            }
            samples.push(last + Rational::one());
        }
        _ => samples.push(Rational::one()),
    }
    let mut pieces: Vec<ParametricPiece> = Vec::new();
    for (k, gamma) in samples.into_iter().enumerate() {
        let record = problem.solve_weighted_sum(&Weight::new(gamma)?)?;
        let lo = if k == 0 { int(0) } else { breakpoints[k - 1].clone() };
        let hi = breakpoints.get(k).cloned();
        match pieces.last_mut() {
            Some(prev) if prev.record.token == record.token => prev.hi = hi,
            _ => pieces.push(ParametricPiece { lo, hi, record }),
        }
    }
    Ok(pieces)
}
