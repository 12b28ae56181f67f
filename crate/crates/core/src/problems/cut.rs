//! Bicriteria minimum s-t cut via Edmonds-Karp max flow on exact rational
//! capacities.

use std::collections::VecDeque;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::problem::{check_scalarization, implied_weight, BicriteriaProblem};
use crate::problems::graph::BiweightedGraph;
use crate::problems::{check_positivity, edge_bounds};
use crate::types::{Bounds, CostPair, Rational, SolutionRecord, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCutProblem {
    pub graph: BiweightedGraph,
    pub source: usize,
    pub sink: usize,
    pub relaxed: bool,
}

impl MinCutProblem {
    pub fn new(graph: BiweightedGraph, source: usize, sink: usize, relaxed: bool) -> Result<Self> {
        check_positivity(&graph, relaxed)?;
        for (name, node) in [("source", source), ("sink", sink)] {
            if node >= graph.node_count {
                return Err(Error::validation(name, "node out of range"));
            }
        }
        if source == sink {
            return Err(Error::validation("sink", "source and sink must differ"));
        }
        // A disconnected pair has a zero cut, which only the relaxed regime allows.
        if !relaxed && !graph.connects(source, sink) {
            return Err(Error::Unreachable {
                source_node: source,
                sink_node: sink,
            });
        }
        Ok(MinCutProblem {
            graph,
            source,
            sink,
            relaxed,
        })
    }

    /// Total costs of the edges leaving `side`.
    pub fn cut_costs(&self, side: &[bool]) -> CostPair {
        let mut total = CostPair::zero();
        for e in &self.graph.edges {
            if side[e.u] != side[e.v] {
                total += &e.w;
            }
        }
        total
    }

    /// Source side of a minimum cut under the given capacities: the nodes
    /// reachable from the source in the final residual graph.
    pub fn min_cut_side(&self, capacity: &[Rational]) -> Vec<usize> {
        let n = self.graph.node_count;
        let adj = self.graph.adjacency();
        // flow[e] > 0 means flow from edges[e].u to edges[e].v.
        let mut flow = vec![Rational::zero(); self.graph.edges.len()];
        let residual = |flow: &[Rational], ei: usize, from: usize| -> Rational {
            let e = &self.graph.edges[ei];
            if from == e.u {
                &capacity[ei] - &flow[ei]
            } else {
                &capacity[ei] + &flow[ei]
            }
        };
        loop {
            let mut via: Vec<Option<usize>> = vec![None; n];
            let mut seen = vec![false; n];
            seen[self.source] = true;
            let mut queue = VecDeque::from([self.source]);
            while let Some(u) = queue.pop_front() {
                for &ei in &adj[u] {
                    let v = self.graph.edges[ei].other(u);
                    if !seen[v] && residual(&flow, ei, u).is_positive() {
                        seen[v] = true;
                        via[v] = Some(ei);
                        queue.push_back(v);
                    }
                }
            }
            if !seen[self.sink] {
                return (0..n).filter(|&v| seen[v]).collect();
            }
            let mut bottleneck: Option<Rational> = None;
            let mut cur = self.sink;
            while cur != self.source {
                let ei = via[cur].expect("BFS tree edge");
                let prev = self.graph.edges[ei].other(cur);
                let r = residual(&flow, ei, prev);
                bottleneck = Some(match bottleneck {
                    Some(b) if b <= r => b,
                    _ => r,
                });
                cur = prev;
            }
            let push = bottleneck.expect("augmenting path is nonempty");
            let mut cur = self.sink;
            while cur != self.source {
                let ei = via[cur].expect("BFS tree edge");
                let prev = self.graph.edges[ei].other(cur);
                if prev == self.graph.edges[ei].u {
                    flow[ei] += &push;
                } else {
                    flow[ei] -= &push;
                }
                cur = prev;
            }
        }
    }

    pub fn cut_oracle(&self, gamma: &Weight) -> Result<SolutionRecord> {
        self.solve_weighted_sum(gamma)
    }
}

impl BicriteriaProblem for MinCutProblem {
    fn kind(&self) -> &'static str {
        "cut"
    }

    fn alpha(&self) -> Rational {
        Rational::one()
    }

    fn relaxed(&self) -> bool {
        self.relaxed
    }

    /// The token is the source side of the cut.
    fn evaluate(&self, token: &[usize]) -> Result<CostPair> {
        let mut side = vec![false; self.graph.node_count];
        for &v in token {
            if v >= self.graph.node_count {
                return Err(Error::InfeasibleToken(format!("node {v} out of range")));
            }
            if std::mem::replace(&mut side[v], true) {
                return Err(Error::InfeasibleToken(format!("node {v} repeated")));
            }
        }
        if !side[self.source] || side[self.sink] {
            return Err(Error::InfeasibleToken(
                "source side must contain the source and not the sink".into(),
            ));
        }
        Ok(self.cut_costs(&side))
    }

    fn bounds(&self) -> Bounds {
        edge_bounds(&self.graph, &Rational::one())
    }

    fn solve_scalarized(&self, c1: &Rational, c2: &Rational) -> Result<SolutionRecord> {
        check_scalarization(c1, c2)?;
        let capacity: Vec<Rational> = self.graph.edges.iter().map(|e| e.w.scalarized(c1, c2)).collect();
        let token = self.min_cut_side(&capacity);
        let image = self.evaluate(&token)?;
        Ok(SolutionRecord::new(token, image).with_weight(implied_weight(c1, c2)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{int, rat};

    fn w(n: i64) -> Weight {
        Weight::new(int(n)).unwrap()
    }

    fn chain() -> MinCutProblem {
        let g = BiweightedGraph::from_int_edges(3, &[(0, 1, 1, 4), (1, 2, 4, 1)]).unwrap();
        MinCutProblem::new(g, 0, 2, false).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = BiweightedGraph::from_int_edges(2, &[(0, 1, 2, 3)]).unwrap();
        let p = MinCutProblem::new(g, 0, 1, false).unwrap();
        for gamma in [rat(1, 7), int(1), int(9)] {
            let rec = p.cut_oracle(&Weight::new(gamma).unwrap()).unwrap();
            assert_eq!(rec.token, vec![0]);
            assert_eq!(rec.image, CostPair::from_ints(2, 3));
        }
    }

    #[test]
    fn chain_cuts() {
        let p = chain();
        let tie = p.cut_oracle(&w(1)).unwrap();
        assert_eq!(tie.image.weighted(&int(1)), int(5));
        assert_eq!(tie.token, vec![0]);
        let at4 = p.cut_oracle(&w(4)).unwrap();
        assert_eq!(at4.token, vec![0, 1]);
        assert_eq!(at4.image.weighted(&int(4)), int(8));
    }

    #[test]
    fn max_flow_handles_parallel_paths() {
        // Two routes s-a-t and s-b-t plus a cross edge a-b.
        let g = BiweightedGraph::from_int_edges(
            4,
            &[(0, 1, 3, 1), (0, 2, 2, 1), (1, 3, 2, 1), (2, 3, 3, 1), (1, 2, 1, 1)],
        )
        .unwrap();
        let p = MinCutProblem::new(g, 0, 3, false).unwrap();
        let rec = p.solve_scalarized(&int(1), &int(0)).unwrap();
        // Max flow under f1 is 5 = 3 + 2 out of s.
        assert_eq!(rec.image.f1, int(5));
    }

    #[test]
    fn evaluate_checks_sides() {
        let p = chain();
        assert_eq!(p.evaluate(&[0]).unwrap(), CostPair::from_ints(1, 4));
        assert!(p.evaluate(&[1]).is_err());
        assert!(p.evaluate(&[0, 2]).is_err());
    }
}
