//! Bicriteria minimum-weight vertex cover with the local-ratio
//! 2-approximation as weighted-sum oracle.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::problem::{check_scalarization, implied_weight, BicriteriaProblem};
use crate::problems::bounds_from;
use crate::problems::graph::VertexWeightedGraph;
use crate::types::{int, Bounds, CostPair, Rational, SolutionRecord, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCoverProblem {
    pub graph: VertexWeightedGraph,
    pub relaxed: bool,
}

impl VertexCoverProblem {
    pub fn new(graph: VertexWeightedGraph, relaxed: bool) -> Result<Self> {
        if !relaxed {
            if let Some(i) = graph.weights.iter().position(|w| !w.is_strictly_positive()) {
                return Err(Error::validation(
                    format!("vertex_weights[{i}]"),
                    "weights must be strictly positive unless the instance is relaxed",
                ));
            }
            // Without edges the empty cover has image (0, 0).
            if graph.edges.is_empty() {
                return Err(Error::validation("edges", "a strict instance needs at least one edge"));
            }
        }
        Ok(VertexCoverProblem { graph, relaxed })
    }

    /// Local ratio: for each edge in order, if both endpoints still have
    /// residual weight, subtract the smaller residual from both. Vertices
    /// left at zero residual that touch an edge form the cover.
    pub fn local_ratio(&self, c1: &Rational, c2: &Rational) -> Vec<usize> {
        let mut residual: Vec<Rational> = self.graph.weights.iter().map(|w| w.scalarized(c1, c2)).collect();
        let mut touched = vec![false; self.graph.node_count];
        for &(u, v) in &self.graph.edges {
            touched[u] = true;
            touched[v] = true;
            if residual[u].is_positive() && residual[v].is_positive() {
                let step = residual[u].clone().min(residual[v].clone());
                residual[u] -= &step;
                residual[v] -= &step;
            }
        }
        (0..self.graph.node_count)
            .filter(|&v| touched[v] && residual[v].is_zero())
            .collect()
    }

    pub fn vc_oracle(&self, gamma: &Weight) -> Result<SolutionRecord> {
        self.solve_weighted_sum(gamma)
    }
}

impl BicriteriaProblem for VertexCoverProblem {
    fn kind(&self) -> &'static str {
        "vc"
    }

    fn alpha(&self) -> Rational {
        int(2)
    }

    fn relaxed(&self) -> bool {
        self.relaxed
    }

    fn evaluate(&self, token: &[usize]) -> Result<CostPair> {
        let mut seen = vec![false; self.graph.node_count];
        for &v in token {
            if v >= self.graph.node_count {
                return Err(Error::InfeasibleToken(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InfeasibleToken(format!("vertex {v} repeated")));
            }
        }
        if !self.graph.is_cover(token) {
            return Err(Error::InfeasibleToken("vertices do not cover every edge".into()));
        }
        Ok(self.graph.vertex_costs(token))
    }

    fn bounds(&self) -> Bounds {
        bounds_from(
            self.graph.weights.iter().map(|w| &w.f1),
            self.graph.weights.iter().map(|w| &w.f2),
            &int(1),
        )
    }

    fn solve_scalarized(&self, c1: &Rational, c2: &Rational) -> Result<SolutionRecord> {
        check_scalarization(c1, c2)?;
        let token = self.local_ratio(c1, c2);
        let image = self.graph.vertex_costs(&token);
        Ok(SolutionRecord::new(token, image).with_weight(implied_weight(c1, c2)))
    }
}
