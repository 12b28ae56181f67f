#![allow(dead_code)]

use bicrit_core::problems::{
    BiweightedGraph, Edge, Instance, MinCutProblem, MstProblem, ShortestPathProblem, VertexCoverProblem,
    VertexWeightedGraph,
};
use bicrit_core::types::{rat, CostPair, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Positive weight; one in four has denominator 2 or 3.
pub fn weight(rng: &mut StdRng) -> Rational {
    let denom = if rng.gen_bool(0.25) { rng.gen_range(2..=3) } else { 1 };
    rat(rng.gen_range(1..=6), denom)
}

pub fn cost(rng: &mut StdRng) -> CostPair {
    CostPair::new(weight(rng), weight(rng))
}

pub fn gamma(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(1..=30), rng.gen_range(1..=10))
}

/// Connected multigraph: a random spanning tree plus `extra` random edges.
pub fn connected_graph(rng: &mut StdRng, nodes: usize, extra: usize) -> BiweightedGraph {
    let mut edges = Vec::new();
    for v in 1..nodes {
        let u = rng.gen_range(0..v);
        edges.push(Edge::new(u, v, cost(rng)));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..nodes);
        let mut v = rng.gen_range(0..nodes - 1);
        if v >= u {
            v += 1;
        }
        edges.push(Edge::new(u, v, cost(rng)));
    }
    // Shuffle so the tree edges are not always first.
    for i in (1..edges.len()).rev() {
        let j = rng.gen_range(0..=i);
        edges.swap(i, j);
    }
    BiweightedGraph::new(nodes, edges).unwrap()
}

pub fn mst(rng: &mut StdRng) -> MstProblem {
    let n = rng.gen_range(2..=6);
    let extra = rng.gen_range(0..=4);
    MstProblem::new(connected_graph(rng, n, extra), false).unwrap()
}

pub fn path(rng: &mut StdRng) -> ShortestPathProblem {
    let n = rng.gen_range(2..=7);
    let extra = rng.gen_range(0..=5);
    ShortestPathProblem::new(connected_graph(rng, n, extra), 0, n - 1, false).unwrap()
}

pub fn cut(rng: &mut StdRng) -> MinCutProblem {
    let n = rng.gen_range(2..=7);
    let extra = rng.gen_range(0..=5);
    MinCutProblem::new(connected_graph(rng, n, extra), 0, n - 1, false).unwrap()
}

pub fn vertex_cover(rng: &mut StdRng) -> VertexCoverProblem {
    let n = rng.gen_range(2..=10);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    if edges.is_empty() {
        edges.push((0, 1));
    }
    let weights = (0..n).map(|_| cost(rng)).collect();
    VertexCoverProblem::new(VertexWeightedGraph::new(n, edges, weights).unwrap(), false).unwrap()
}

/// 60 spanning-tree, 50 path, 40 cut and 50 vertex-cover instances.
pub fn suite(seed: u64) -> Vec<Instance> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    out.extend((0..60).map(|_| Instance::Mst(mst(&mut rng))));
    out.extend((0..50).map(|_| Instance::Path(path(&mut rng))));
    out.extend((0..40).map(|_| Instance::Cut(cut(&mut rng))));
    out.extend((0..50).map(|_| Instance::VertexCover(vertex_cover(&mut rng))));
    out
}

pub fn is_exact(instance: &Instance) -> bool {
    !matches!(instance, Instance::VertexCover(_))
}
