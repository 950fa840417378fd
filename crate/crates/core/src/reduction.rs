//! Reduction from loop cutsets of a directed network to feedback vertex sets
//! of its splitting graph.
//!
//! Every node `v` becomes `v_in` (weight infinite, carrying the in-edges) and
//! `v_out` (weight `ln |domain(v)|`, carrying the out-edges), joined by an
//! edge. Loops of the network correspond one-to-one with cycles of the split
//! graph, and removing `v_out` breaks exactly the cycles on which `v` is not
//! a sink.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DirectedNetwork, NodeId, VertexId, VertexSet, Weight, WeightedMultigraph};
use crate::solver::{Algorithm, SolveError, SolveResult};
use crate::SolveOptions;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    In,
    Out,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("vertex id {0} is not part of the split graph")]
    UnknownSplitVertex(usize),
}

/// Links network nodes with their two split vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitMap {
    halves: Vec<(VertexId, VertexId)>,
    origin: Vec<(NodeId, Side)>,
}

impl SplitMap {
    pub fn in_vertex(&self, v: NodeId) -> VertexId {
        self.halves[v.0].0
    }

    pub fn out_vertex(&self, v: NodeId) -> VertexId {
        self.halves[v.0].1
    }

    pub fn origin(&self, x: VertexId) -> Option<(NodeId, Side)> {
        self.origin.get(x.0).copied()
    }

    pub fn len(&self) -> usize {
        self.halves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halves.is_empty()
    }
}

/// Builds the splitting graph. Vertex `2i` is `v_in` and `2i + 1` is
/// `v_out` for node `i`; the `n` internal edges come first, then one edge
/// per directed edge in network order.
pub fn split(d: &DirectedNetwork) -> (WeightedMultigraph, SplitMap) {
    let n = d.node_count();
    let mut g = WeightedMultigraph::with_capacity(2 * n, n + d.edge_count());
    let mut halves = Vec::with_capacity(n);
    let mut origin = Vec::with_capacity(2 * n);
    for v in d.nodes() {
        let name = d.name(v);
        let vin = g.add_vertex(format!("{name}_in"), Weight::Infinite);
        let vout = g.add_vertex(format!("{name}_out"), Weight::Finite(d.log_weight(v)));
        halves.push((vin, vout));
        origin.push((v, Side::In));
        origin.push((v, Side::Out));
    }
    for &(vin, vout) in &halves {
        g.add_edge(vin, vout).expect("split vertices exist");
    }
    for &(p, c) in d.edges() {
        g.add_edge(halves[p.0].1, halves[c.0].0)
            .expect("split vertices exist");
    }
    (g, SplitMap { halves, origin })
}

/// Collapses split vertices onto their network nodes, sorted and deduplicated.
pub fn psi(x: &VertexSet, map: &SplitMap) -> Result<Vec<NodeId>, ReductionError> {
    let mut nodes = x
        .iter()
        .map(|v| {
            map.origin(v)
                .map(|(node, _)| node)
                .ok_or(ReductionError::UnknownSplitVertex(v.0))
        })
        .collect::<Result<Vec<_>, _>>()?;
    nodes.sort_unstable();
    nodes.dedup();
    Ok(nodes)
}

/// True iff `s` contains a non-sink node of every loop of `d`.
pub fn is_loop_cutset(d: &DirectedNetwork, s: &[NodeId]) -> bool {
    let (g, map) = split(d);
    let outs: Vec<VertexId> = s
        .iter()
        .filter(|v| v.0 < d.node_count())
        .map(|&v| map.out_vertex(v))
        .collect();
    g.is_forest_without(&outs)
}

/// A loop cutset together with the split-graph solve that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct LoopCutset {
    pub nodes: Vec<NodeId>,
    /// Sum of `ln |domain|` over the cutset.
    pub instances_log: f64,
    /// Product of domain sizes, `None` if it overflows `u128`.
    pub instance_count: Option<u128>,
    pub split_result: SolveResult,
}

impl LoopCutset {
    pub fn names<'a>(&self, d: &'a DirectedNetwork) -> Vec<&'a str> {
        self.nodes.iter().map(|&v| d.name(v)).collect()
    }
}

/// Splits `d`, solves the feedback set problem with `algorithm` and maps the
/// result back onto network nodes.
pub fn loop_cutset(
    d: &DirectedNetwork,
    algorithm: Algorithm,
    options: &SolveOptions,
) -> Result<LoopCutset, SolveError> {
    let (g, map) = split(d);
    let split_result = crate::solve(&g, algorithm, options)?;
    debug_assert!(split_result.total_weight().is_finite());
    let nodes = psi(&split_result.set, &map).expect("solver output lies in the split graph");
    Ok(LoopCutset {
        instances_log: d.instances_log(&nodes),
        instance_count: d.instance_count(&nodes),
        nodes,
        split_result,
    })
}
