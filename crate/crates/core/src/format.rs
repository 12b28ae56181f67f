//! JSON instance files.
//!
//! ```json
//! {"kind": "mst", "relaxed": false, "nodes": 3,
//!  "edges": [{"u": 0, "v": 1, "w1": "3", "w2": "1/2"}]}
//! ```
//!
//! Path and cut instances add `source` and `sink`. Vertex-cover instances
//! give unweighted edges and a `vertex_weights` list of `{"w1", "w2"}`.
//! Weights are exact rationals written `"p/q"` or `"p"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::{
    BiweightedGraph, Edge, Instance, MinCutProblem, MstProblem, ShortestPathProblem, VertexCoverProblem,
    VertexWeightedGraph,
};
use crate::types::{format_rational, parse_rational, CostPair, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Mst,
    Path,
    Cut,
    Vc,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    kind: Kind,
    #[serde(default)]
    relaxed: bool,
    nodes: usize,
    #[serde(default)]
    edges: Vec<EdgeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sink: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex_weights: Option<Vec<WeightEntry>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeEntry {
    u: usize,
    v: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    w1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    w2: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightEntry {
    w1: String,
    w2: String,
}

fn weight(field: String, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| Error::validation(field, e.to_string()))
}

fn pair(prefix: &str, w1: Option<&str>, w2: Option<&str>) -> Result<CostPair> {
    let get = |name: &str, value: Option<&str>| match value {
        Some(text) => weight(format!("{prefix}.{name}"), text),
        None => Err(Error::validation(format!("{prefix}.{name}"), "missing weight")),
    };
    Ok(CostPair::new(get("w1", w1)?, get("w2", w2)?))
}

fn required(value: Option<usize>, field: &str) -> Result<usize> {
    value.ok_or_else(|| Error::validation(field, "required for this problem kind"))
}

fn structural(err: Error) -> Error {
    match err {
        Error::DisconnectedGraph => Error::validation("edges", "graph is not connected"),
        Error::Unreachable { source_node, sink_node } => {
            Error::validation("sink", format!("node {sink_node} is not reachable from {source_node}"))
        }
        other => other,
    }
}

/// Parses and validates an instance.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(file).map_err(structural)
}

fn build(file: InstanceFile) -> Result<Instance> {
    if file.kind == Kind::Vc {
        for field in [("source", file.source), ("sink", file.sink)] {
            if field.1.is_some() {
                return Err(Error::validation(field.0, "not used by vertex cover"));
            }
        }
        let mut edges = Vec::with_capacity(file.edges.len());
        for (i, e) in file.edges.iter().enumerate() {
            if e.w1.is_some() || e.w2.is_some() {
                return Err(Error::validation(
                    format!("edges[{i}]"),
                    "vertex-cover edges carry no weights",
                ));
            }
            edges.push((e.u, e.v));
        }
        let weights = file
            .vertex_weights
            .as_deref()
            .ok_or_else(|| Error::validation("vertex_weights", "required for vertex cover"))?
            .iter()
            .enumerate()
            .map(|(i, w)| pair(&format!("vertex_weights[{i}]"), Some(&w.w1), Some(&w.w2)))
            .collect::<Result<Vec<_>>>()?;
        let graph = VertexWeightedGraph::new(file.nodes, edges, weights)?;
        return Ok(Instance::VertexCover(VertexCoverProblem::new(graph, file.relaxed)?));
    }

    if file.vertex_weights.is_some() {
        return Err(Error::validation("vertex_weights", "only used by vertex cover"));
    }
    let edges = file
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            Ok(Edge::new(
                e.u,
                e.v,
                pair(&format!("edges[{i}]"), e.w1.as_deref(), e.w2.as_deref())?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let graph = BiweightedGraph::new(file.nodes, edges)?;
    match file.kind {
        Kind::Mst => {
            if file.source.is_some() || file.sink.is_some() {
                return Err(Error::validation("source", "not used by spanning tree"));
            }
            Ok(Instance::Mst(MstProblem::new(graph, file.relaxed)?))
        }
        Kind::Path => {
            let (s, t) = (required(file.source, "source")?, required(file.sink, "sink")?);
            Ok(Instance::Path(ShortestPathProblem::new(graph, s, t, file.relaxed)?))
        }
        Kind::Cut => {
            let (s, t) = (required(file.source, "source")?, required(file.sink, "sink")?);
            Ok(Instance::Cut(MinCutProblem::new(graph, s, t, file.relaxed)?))
        }
        Kind::Vc => unreachable!(),
    }
}

fn edge_entries(graph: &BiweightedGraph) -> Vec<EdgeEntry> {
    graph
        .edges
        .iter()
        .map(|e| EdgeEntry {
            u: e.u,
            v: e.v,
            w1: Some(format_rational(&e.w.f1)),
            w2: Some(format_rational(&e.w.f2)),
        })
        .collect()
}

/// Writes `instance` in the format read by [`parse_instance`].
pub fn serialize_instance(instance: &Instance) -> String {
    let file = match instance {
        Instance::Mst(p) => InstanceFile {
            kind: Kind::Mst,
            relaxed: p.relaxed,
            nodes: p.graph.node_count,
            edges: edge_entries(&p.graph),
            source: None,
            sink: None,
            vertex_weights: None,
        },
        Instance::Path(p) => InstanceFile {
            kind: Kind::Path,
            relaxed: p.relaxed,
            nodes: p.graph.node_count,
            edges: edge_entries(&p.graph),
            source: Some(p.source),
            sink: Some(p.sink),
            vertex_weights: None,
        },
        Instance::Cut(p) => InstanceFile {
            kind: Kind::Cut,
            relaxed: p.relaxed,
            nodes: p.graph.node_count,
            edges: edge_entries(&p.graph),
            source: Some(p.source),
            sink: Some(p.sink),
            vertex_weights: None,
        },
        Instance::VertexCover(p) => InstanceFile {
            kind: Kind::Vc,
            relaxed: p.relaxed,
            nodes: p.graph.node_count,
            edges: p
                .graph
                .edges
                .iter()
                .map(|&(u, v)| EdgeEntry {
                    u,
                    v,
                    w1: None,
                    w2: None,
                })
                .collect(),
            source: None,
            sink: None,
            vertex_weights: Some(
                p.graph
                    .weights
                    .iter()
                    .map(|w| WeightEntry {
                        w1: format_rational(&w.f1),
                        w2: format_rational(&w.f2),
                    })
                    .collect(),
            ),
        },
    };
    serde_json::to_string_pretty(&file).expect("instance files always serialize")
}
