//! Concrete problem plugins.

pub mod adversarial;
pub mod cut;
pub mod graph;
pub mod mst;
pub mod path;
pub mod vertex_cover;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::oracle::Enumerate;
use crate::problem::{BicriteriaProblem, LinearValue, ParametricPiece, ParametricProblem};
use crate::types::{int, Bounds, Rational, SolutionRecord, Weight};

pub use adversarial::{AdversarialOracle, SelectionPolicy};
pub use cut::MinCutProblem;
pub use graph::{BiweightedGraph, Edge, VertexWeightedGraph};
pub use mst::{mst_parametric_all, MstProblem};
pub use path::ShortestPathProblem;
pub use vertex_cover::VertexCoverProblem;

/// Any of the supported problem kinds, as read from an instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Mst(MstProblem),
    Path(ShortestPathProblem),
    Cut(MinCutProblem),
    VertexCover(VertexCoverProblem),
}

impl Instance {
    pub fn problem(&self) -> &dyn BicriteriaProblem {
        self.enumerable()
    }

    pub fn enumerable(&self) -> &dyn Enumerate {
        match self {
            Instance::Mst(p) => p,
            Instance::Path(p) => p,
            Instance::Cut(p) => p,
            Instance::VertexCover(p) => p,
        }
    }

    pub fn parametric(&self) -> Result<&dyn ParametricProblem> {
        match self {
            Instance::Mst(p) => Ok(p),
            Instance::Path(p) => Ok(p),
            Instance::Cut(_) | Instance::VertexCover(_) => Err(Error::NotParametricCapable(self.kind().to_string())),
        }
    }

    pub fn kind(&self) -> &'static str {
        self.problem().kind()
    }

    /// Node count, or vertex count for vertex cover.
    pub fn node_count(&self) -> usize {
        match self {
            Instance::Mst(p) => p.graph.node_count,
            Instance::Path(p) => p.graph.node_count,
            Instance::Cut(p) => p.graph.node_count,
            Instance::VertexCover(p) => p.graph.node_count,
        }
    }
}

pub(crate) fn check_positivity(graph: &BiweightedGraph, relaxed: bool) -> Result<()> {
    if relaxed {
        return Ok(());
    }
    match graph.edges.iter().position(|e| !e.w.is_strictly_positive()) {
        Some(i) => Err(Error::validation(
            format!("edges[{i}]"),
            "weights must be strictly positive unless the instance is relaxed",
        )),
        None => Ok(()),
    }
}

/// `lb_i = multiplier * (min positive weight)`, `ub_i = sum of weights`.
/// A dimension with no positive weight has no positive solution values, so
/// any positive bracket is valid for it; `[1, 1]` is used.
pub(crate) fn bounds_from<'a>(
    values1: impl Iterator<Item = &'a Rational>,
    values2: impl Iterator<Item = &'a Rational>,
    multiplier: &Rational,
) -> Bounds {
    let dim = |values: Vec<&Rational>| match graph::min_positive(values.iter().copied()) {
        Some(min) => (multiplier * min, graph::sum(values.into_iter())),
        None => (Rational::one(), Rational::one()),
    };
    let (lb1, ub1) = dim(values1.collect());
    let (lb2, ub2) = dim(values2.collect());
    debug_assert!(lb1.is_positive() && lb2.is_positive());
    Bounds::new(lb1, ub1, lb2, ub2).expect("weight sums dominate their minima")
}

pub(crate) fn edge_bounds(graph: &BiweightedGraph, multiplier: &Rational) -> Bounds {
    bounds_from(
        graph.edges.iter().map(|e| &e.w.f1),
        graph.edges.iter().map(|e| &e.w.f2),
        multiplier,
    )
}

/// Exact parametric solution by walking the lower envelope of solution
/// lines `f1 + gamma * f2`.
///
/// Works for any exact plugin that can produce limit solutions. Each probe
/// either confirms a breakpoint or discovers a new envelope line strictly
/// below the two current ones, so it terminates after at most
/// `2 * (#envelope lines)` oracle runs.
pub fn lower_envelope(problem: &dyn ParametricProblem) -> Result<Vec<ParametricPiece>> {
    // gamma -> 0+: minimize f1, then f2.
    let mut near_zero =
        |p: &LinearValue, q: &LinearValue| Ok(p.constant.cmp(&q.constant).then_with(|| p.slope.cmp(&q.slope)));
    // gamma -> inf: minimize f2, then f1.
    let mut near_inf =
        |p: &LinearValue, q: &LinearValue| Ok(p.slope.cmp(&q.slope).then_with(|| p.constant.cmp(&q.constant)));
    let left_token = problem.parametric_run(&mut near_zero)?;
    let right_token = problem.parametric_run(&mut near_inf)?;
    let left = SolutionRecord::new(left_token.clone(), problem.evaluate(&left_token)?);
    let right = SolutionRecord::new(right_token.clone(), problem.evaluate(&right_token)?);

    let mut lines = vec![left.clone()];
    let mut breaks = Vec::new();
    refine_envelope(problem, &left, &right, &mut lines, &mut breaks)?;

    let mut pieces = Vec::with_capacity(lines.len());
    for (k, record) in lines.into_iter().enumerate() {
        let lo = if k == 0 { int(0) } else { breaks[k - 1].clone() };
        pieces.push(ParametricPiece {
            lo,
            hi: breaks.get(k).cloned(),
            record,
        });
    }
    Ok(pieces)
}

fn refine_envelope(
    problem: &dyn ParametricProblem,
    left: &SolutionRecord,
    right: &SolutionRecord,
    lines: &mut Vec<SolutionRecord>,
    breaks: &mut Vec<Rational>,
) -> Result<()> {
    if left.image == right.image {
        return Ok(());
    }
    let crossing = (&right.image.f1 - &left.image.f1) / (&left.image.f2 - &right.image.f2);
    let probe = problem.solve_right_limit(&Weight::new(crossing.clone())?)?;
    if probe.image.weighted(&crossing) == left.image.weighted(&crossing) {
        breaks.push(crossing);
        lines.push(right.clone());
        return Ok(());
    }
    refine_envelope(problem, left, &probe, lines, breaks)?;
    refine_envelope(problem, &probe, right, lines, breaks)
}

/// Small named instances used across the test suites.
pub mod fixtures {
    use super::*;

    /// Triangle 1-2-3 with (1,2)=(3,1), (2,3)=(1,3), (1,3)=(1,1); trees
    /// (4,2), (2,4), (4,4).
    pub fn example1_graph() -> BiweightedGraph {
        BiweightedGraph::from_int_edges(3, &[(0, 1, 3, 1), (1, 2, 1, 3), (0, 2, 1, 1)]).unwrap()
    }

    /// Triangle 1-2-3 with (1,2)=(2,1), (2,3)=(2,1), (1,3)=(1,2); trees
    /// (4,2), (3,3), (3,3).
    pub fn example2_graph() -> BiweightedGraph {
        BiweightedGraph::from_int_edges(3, &[(0, 1, 2, 1), (1, 2, 2, 1), (0, 2, 1, 2)]).unwrap()
    }

    pub fn example1_mst() -> MstProblem {
        MstProblem::new(example1_graph(), false).unwrap()
    }

    pub fn example2_mst() -> MstProblem {
        MstProblem::new(example2_graph(), false).unwrap()
    }

    pub fn single_edge_mst(w1: i64, w2: i64) -> MstProblem {
        MstProblem::new(BiweightedGraph::from_int_edges(2, &[(0, 1, w1, w2)]).unwrap(), false).unwrap()
    }

    /// Two nodes joined by parallel edges (1,0) and (0,1), plus optionally
    /// a third edge (1,1). Only valid as a relaxed instance.
    pub fn zero_boundary_mst(with_middle: bool) -> MstProblem {
        let mut edges = vec![(0, 1, 1, 0), (0, 1, 0, 1)];
        if with_middle {
            edges.push((0, 1, 1, 1));
        }
        MstProblem::new(BiweightedGraph::from_int_edges(2, &edges).unwrap(), true).unwrap()
    }
}
