//! Bicriteria shortest s-t path on an undirected multigraph.

use std::cmp::Ordering;

use num_traits::One;

use crate::error::{Error, Result};
use crate::problem::{
    check_scalarization, implied_weight, scalar_comparator, BicriteriaProblem, Comparator, LinearValue,
    ParametricPiece, ParametricProblem,
};
use crate::problems::graph::BiweightedGraph;
use crate::problems::{check_positivity, edge_bounds, lower_envelope};
use crate::types::{Bounds, CostPair, Rational, SolutionRecord, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPathProblem {
    pub graph: BiweightedGraph,
    pub source: usize,
    pub sink: usize,
    pub relaxed: bool,
}

impl ShortestPathProblem {
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
        if !graph.connects(source, sink) {
            return Err(Error::Unreachable {
                source_node: source,
                sink_node: sink,
            });
        }
        Ok(ShortestPathProblem {
            graph,
            source,
            sink,
            relaxed,
        })
    }

    /// Label-setting search (array-based Dijkstra) with every label
    /// comparison routed through `cmp`. Ties keep the earlier label, and
    /// among equal candidates the lower node index is settled first.
    pub fn dijkstra(&self, cmp: &mut Comparator<'_>) -> Result<Vec<usize>> {
        let n = self.graph.node_count;
        let adj = self.graph.adjacency();
        let weights: Vec<LinearValue> = self.graph.edges.iter().map(|e| LinearValue::from_costs(&e.w)).collect();
        let mut dist: Vec<Option<LinearValue>> = vec![None; n];
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut settled = vec![false; n];
        dist[self.source] = Some(LinearValue::zero());

        loop {
            let mut best: Option<usize> = None;
            for v in 0..n {
                if settled[v] {
                    continue;
                }
                let Some(dv) = &dist[v] else { continue };
                best = match best {
                    None => Some(v),
                    Some(b) => {
                        let db = dist[b].as_ref().expect("candidate has a label");
                        if cmp(dv, db)? == Ordering::Less {
                            Some(v)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(u) = best else { break };
            settled[u] = true;
            if u == self.sink {
                break;
            }
            let du = dist[u].clone().expect("settled node has a label");
            for &ei in &adj[u] {
                let w = self.graph.edges[ei].other(u);
                if settled[w] {
                    continue;
                }
                let candidate = &du + &weights[ei];
                let improves = match &dist[w] {
                    None => true,
                    Some(dw) => cmp(&candidate, dw)? == Ordering::Less,
                };
                if improves {
                    dist[w] = Some(candidate);
                    pred[w] = Some(ei);
                }
            }
        }

        if !settled[self.sink] {
            return Err(Error::Unreachable {
                source_node: self.source,
                sink_node: self.sink,
            });
        }
        let mut path = Vec::new();
        let mut cur = self.sink;
        while cur != self.source {
            let ei = pred[cur].expect("reached node has a predecessor");
            path.push(ei);
            cur = self.graph.edges[ei].other(cur);
        }
        path.sort_unstable();
        Ok(path)
    }

    pub fn sp_oracle(&self, gamma: &Weight) -> Result<SolutionRecord> {
        self.solve_weighted_sum(gamma)
    }
}

impl BicriteriaProblem for ShortestPathProblem {
    fn kind(&self) -> &'static str {
        "path"
    }

    fn alpha(&self) -> Rational {
        Rational::one()
    }

    fn relaxed(&self) -> bool {
        self.relaxed
    }

    /// Accepts the edge set of a simple s-t path in any order.
    fn evaluate(&self, token: &[usize]) -> Result<CostPair> {
        let bad = |msg: &str| Error::InfeasibleToken(msg.to_string());
        let m = self.graph.edges.len();
        let mut used = vec![false; m];
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.graph.node_count];
        for &ei in token {
            if ei >= m {
                return Err(bad("edge index out of range"));
            }
            if std::mem::replace(&mut used[ei], true) {
                return Err(bad("edge repeated"));
            }
            let e = &self.graph.edges[ei];
            incident[e.u].push(ei);
            incident[e.v].push(ei);
        }
        let mut walked = 0;
        let mut cur = self.source;
        let mut prev_edge: Option<usize> = None;
        let mut visited = vec![false; self.graph.node_count];
        visited[cur] = true;
        while cur != self.sink {
            let next: Vec<usize> = incident[cur]
                .iter()
                .copied()
                .filter(|&ei| Some(ei) != prev_edge)
                .collect();
            if next.len() != 1 {
                return Err(bad("edges do not form a simple s-t path"));
            }
            let ei = next[0];
            cur = self.graph.edges[ei].other(cur);
            if std::mem::replace(&mut visited[cur], true) {
                return Err(bad("path revisits a node"));
            }
            prev_edge = Some(ei);
            walked += 1;
        }
        if walked != token.len() {
            return Err(bad("edges do not form a simple s-t path"));
        }
        Ok(self.graph.edge_costs(token))
    }

    fn bounds(&self) -> Bounds {
        edge_bounds(&self.graph, &Rational::one())
    }

    fn solve_scalarized(&self, c1: &Rational, c2: &Rational) -> Result<SolutionRecord> {
        check_scalarization(c1, c2)?;
        let mut cmp = scalar_comparator(c1.clone(), c2.clone());
        let token = self.dijkstra(&mut cmp)?;
        let image = self.graph.edge_costs(&token);
        Ok(SolutionRecord::new(token, image).with_weight(implied_weight(c1, c2)))
    }
}

impl ParametricProblem for ShortestPathProblem {
    fn parametric_run(&self, cmp: &mut Comparator<'_>) -> Result<Vec<usize>> {
        self.dijkstra(cmp)
    }

    fn parametric_all(&self) -> Result<Vec<ParametricPiece>> {
        lower_envelope(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{int, rat};

    fn w(n: i64, d: i64) -> Weight {
        Weight::new(rat(n, d)).unwrap()
    }

    fn parallel() -> ShortestPathProblem {
        let g = BiweightedGraph::from_int_edges(2, &[(0, 1, 1, 3), (0, 1, 3, 1)]).unwrap();
        ShortestPathProblem::new(g, 0, 1, false).unwrap()
    }

    /// s=0, a=1, t=2: direct edge (5,1), detour (1,1)+(1,1) = (2,2).
    /// Direct wins iff 5 + g < 2 + 2g, i.e. g > 3.
    fn detour() -> ShortestPathProblem {
        let g = BiweightedGraph::from_int_edges(3, &[(0, 2, 5, 1), (0, 1, 1, 1), (1, 2, 1, 1)]).unwrap();
        ShortestPathProblem::new(g, 0, 2, false).unwrap()
    }

    #[test]
    fn parallel_edges() {
        let p = parallel();
        let tie = p.sp_oracle(&w(1, 1)).unwrap();
        assert_eq!(tie.token, vec![0]);
        assert_eq!(tie.image.weighted(&int(1)), int(4));
        assert_eq!(p.sp_oracle(&w(3, 1)).unwrap().image, CostPair::from_ints(3, 1));
    }

    #[test]
    fn optimum_flips_between_paths() {
        let p = detour();
        assert_eq!(p.sp_oracle(&w(1, 1)).unwrap().image, CostPair::from_ints(2, 2));
        assert_eq!(p.sp_oracle(&w(4, 1)).unwrap().image, CostPair::from_ints(5, 1));
        let pieces = p.parametric_all().unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].hi, Some(int(3)));
        assert_eq!(pieces[1].record.image, CostPair::from_ints(5, 1));
    }

    #[test]
    fn evaluate_checks_paths() {
        let p = detour();
        assert_eq!(p.evaluate(&[1, 2]).unwrap(), CostPair::from_ints(2, 2));
        assert_eq!(p.evaluate(&[2, 1]).unwrap(), CostPair::from_ints(2, 2));
        assert!(p.evaluate(&[1]).is_err());
        assert!(p.evaluate(&[0, 1, 2]).is_err());
        assert!(p.evaluate(&[]).is_err());
    }

    #[test]
    fn unreachable_sink() {
        let g = BiweightedGraph::from_int_edges(3, &[(0, 1, 1, 1)]).unwrap();
        assert!(matches!(
            ShortestPathProblem::new(g, 0, 2, false),
            Err(Error::Unreachable { .. })
        ));
    }
}
