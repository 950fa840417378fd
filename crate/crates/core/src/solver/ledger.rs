use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, VertexId, WeightedMultigraph};

/// One greedy selection step.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Iteration {
    pub vertex: VertexId,
    /// Working weight of the vertex when it was picked.
    pub weight: f64,
    /// Degree of the vertex in the current graph when it was picked.
    pub degree: usize,
    /// `weight / degree`, the charge put on every edge removed in this step.
    pub ratio: f64,
    /// The picked vertex's own edges followed by the edges lost to pruning.
    pub charged_edges: Vec<EdgeId>,
}

/// Edge charges produced by a greedy run over the pruned input graph.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ChargeLedger {
    iterations: Vec<Iteration>,
    charges: Vec<Option<f64>>,
}

impl ChargeLedger {
    pub(crate) fn with_edge_bound(edges: usize) -> Self {
        ChargeLedger {
            iterations: Vec::new(),
            charges: vec![None; edges],
        }
    }

    pub(crate) fn record(&mut self, step: Iteration) {
        for e in &step.charged_edges {
            debug_assert!(self.charges[e.0].is_none(), "edge {e:?} charged twice");
            self.charges[e.0] = Some(step.ratio);
        }
        self.iterations.push(step);
    }

    pub fn iterations(&self) -> &[Iteration] {
        &self.iterations
    }

    pub fn len(&self) -> usize {
        self.iterations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.iterations.is_empty()
    }

    /// Charge of edge `e`, if it was removed during the greedy phase.
    pub fn charge(&self, e: EdgeId) -> Option<f64> {
        self.charges.get(e.0).copied().flatten()
    }

    /// Whether the selection ratios never decrease, up to relative slack `tol`.
    pub fn is_monotone(&self, tol: f64) -> bool {
        self.iterations
            .windows(2)
            .all(|w| w[1].ratio >= w[0].ratio - tol * w[0].ratio.abs().max(1.0))
    }

    /// Total charge over the edge slots of `v` in `pruned` (the graph the
    /// greedy phase started from). A self-loop is counted twice, matching
    /// its contribution to the degree.
    pub fn vertex_charge(&self, pruned: &WeightedMultigraph, v: VertexId) -> f64 {
        pruned
            .incident_edges(v)
            .map(|e| {
                let c = self.charge(e).unwrap_or(0.0);
                let (a, b) = pruned.endpoints(e);
                if a == b {
                    2.0 * c
                } else {
                    c
                }
            })
            .sum()
    }

    /// True iff every live edge of `pruned` received exactly one charge.
    pub fn covers(&self, pruned: &WeightedMultigraph) -> bool {
        pruned.edges().all(|(e, _, _)| self.charge(e).is_some())
            && self.iterations.iter().map(|i| i.charged_edges.len()).sum::<usize>()
                == pruned.edge_count()
    }
}
