use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::types::{CostPair, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: CostPair,
}

impl Edge {
    pub fn new(u: usize, v: usize, w: CostPair) -> Self {
        Edge { u, v, w }
    }

    pub fn other(&self, node: usize) -> usize {
        if node == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph with two costs per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiweightedGraph {
    pub node_count: usize,
    pub edges: Vec<Edge>,
}

impl BiweightedGraph {
    pub fn new(node_count: usize, edges: Vec<Edge>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.u >= node_count || e.v >= node_count {
                return Err(Error::validation(
                    format!("edges[{i}]"),
                    format!("endpoint out of range for {node_count} nodes"),
                ));
            }
            if e.u == e.v {
                return Err(Error::validation(format!("edges[{i}]"), "self-loops are not allowed"));
            }
            if !e.w.is_nonnegative() {
                return Err(Error::validation(format!("edges[{i}]"), "negative weight"));
            }
        }
        Ok(BiweightedGraph { node_count, edges })
    }

    /// Convenience constructor from integer weights.
    pub fn from_int_edges(node_count: usize, edges: &[(usize, usize, i64, i64)]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|&(u, v, a, b)| Edge::new(u, v, CostPair::from_ints(a, b)))
            .collect();
        BiweightedGraph::new(node_count, edges)
    }

    /// Incident edge indices per node, in edge order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push(i);
            adj[e.v].push(i);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut dsu = DisjointSets::new(self.node_count);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        let root = dsu.find(0);
        (1..self.node_count).all(|v| dsu.find(v) == root)
    }

    pub fn connects(&self, s: usize, t: usize) -> bool {
        let mut dsu = DisjointSets::new(self.node_count);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        dsu.find(s) == dsu.find(t)
    }

    pub fn has_zero_weight(&self) -> bool {
        self.edges.iter().any(|e| !e.w.is_strictly_positive())
    }

    pub fn edge_costs(&self, indices: &[usize]) -> CostPair {
        let mut total = CostPair::zero();
        for &i in indices {
            total += &self.edges[i].w;
        }
        total
    }

    pub fn total_costs(&self) -> CostPair {
        self.edges.iter().fold(CostPair::zero(), |acc, e| &acc + &e.w)
    }
}

/// Undirected graph with two costs per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWeightedGraph {
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<CostPair>,
}

impl VertexWeightedGraph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>, weights: Vec<CostPair>) -> Result<Self> {
        if weights.len() != node_count {
            return Err(Error::validation(
                "vertex_weights",
                format!("expected {node_count} entries, got {}", weights.len()),
            ));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= node_count || v >= node_count {
                return Err(Error::validation(format!("edges[{i}]"), "endpoint out of range"));
            }
            if u == v {
                return Err(Error::validation(format!("edges[{i}]"), "self-loops are not allowed"));
            }
        }
        for (i, w) in weights.iter().enumerate() {
            if !w.is_nonnegative() {
                return Err(Error::validation(format!("vertex_weights[{i}]"), "negative weight"));
            }
        }
        Ok(VertexWeightedGraph {
            node_count,
            edges,
            weights,
        })
    }

    pub fn from_ints(node_count: usize, edges: &[(usize, usize)], weights: &[(i64, i64)]) -> Result<Self> {
        let weights = weights.iter().map(|&(a, b)| CostPair::from_ints(a, b)).collect();
        VertexWeightedGraph::new(node_count, edges.to_vec(), weights)
    }

    pub fn is_cover(&self, vertices: &[usize]) -> bool {
        let mut chosen = vec![false; self.node_count];
        for &v in vertices {
            if v >= self.node_count {
                return false;
            }
            chosen[v] = true;
        }
        self.edges.iter().all(|&(u, v)| chosen[u] || chosen[v])
    }

    pub fn vertex_costs(&self, vertices: &[usize]) -> CostPair {
        let mut total = CostPair::zero();
        for &v in vertices {
            total += &self.weights[v];
        }
        total
    }
}

#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            Ordering::Less => self.parent[ra] = rb,
            Ordering::Greater => self.parent[rb] = ra,
            Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Stable merge sort with a fallible comparator.
pub(crate) fn merge_sort_by<T: Clone>(items: &[T], cmp: &mut dyn FnMut(&T, &T) -> Result<Ordering>) -> Result<Vec<T>> {
    if items.len() <= 1 {
        return Ok(items.to_vec());
    }
    let mid = items.len() / 2;
    let left = merge_sort_by(&items[..mid], cmp)?;
    let right = merge_sort_by(&items[mid..], cmp)?;
    let mut out = Vec::with_capacity(items.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() && j < right.len() {
        if cmp(&right[j], &left[i])? == Ordering::Less {
            out.push(right[j].clone());
            j += 1;
        } else {
            out.push(left[i].clone());
            i += 1;
        }
    }
    out.extend_from_slice(&left[i..]);
    out.extend_from_slice(&right[j..]);
    Ok(out)
}

/// Smallest strictly positive value, if any.
pub(crate) fn min_positive<'a>(values: impl Iterator<Item = &'a Rational>) -> Option<Rational> {
    values.filter(|v| v.is_positive()).min().cloned()
}

pub(crate) fn sum<'a>(values: impl Iterator<Item = &'a Rational>) -> Rational {
    values.fold(Rational::zero(), |acc, v| acc + v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_sort_is_stable() {
        let items = vec![(2, 'a'), (1, 'b'), (2, 'c'), (1, 'd')];
        let mut cmp = |a: &(i32, char), b: &(i32, char)| Ok(a.0.cmp(&b.0));
        let sorted = merge_sort_by(&items, &mut cmp).unwrap();
        assert_eq!(sorted, vec![(1, 'b'), (1, 'd'), (2, 'a'), (2, 'c')]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(BiweightedGraph::from_int_edges(2, &[(0, 2, 1, 1)]).is_err());
        assert!(BiweightedGraph::from_int_edges(2, &[(1, 1, 1, 1)]).is_err());
        assert!(BiweightedGraph::from_int_edges(2, &[(0, 1, -1, 1)]).is_err());
    }

    #[test]
    fn connectivity() {
        let g = BiweightedGraph::from_int_edges(3, &[(0, 1, 1, 1)]).unwrap();
        assert!(!g.is_connected());
        assert!(g.connects(1, 0));
        assert!(!g.connects(0, 2));
    }
}
