//! Graph representations shared by every solver: the undirected weighted
//! multigraph the feedback-set algorithms run on, and the directed network
//! (a Bayesian network skeleton) that gets reduced to it.

mod dsu;
mod multigraph;
mod network;
mod weight;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dsu::DisjointSets;
pub use multigraph::{EdgeId, VertexId, WeightedMultigraph};
pub use network::{DirectedNetwork, NetworkBuilder, NetworkError, NodeId};
pub use weight::{cmp_ratio, Weight};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("invalid weight {0}: weights must be finite and nonnegative (use Infinite explicitly)")]
    InvalidWeight(f64),
}

/// A duplicate-free set of vertices, kept sorted by id, together with the
/// sum of its members' weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexSet {
    members: Vec<VertexId>,
    total_weight: Weight,
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet {
            members: Vec::new(),
            total_weight: Weight::ZERO,
        }
    }

    /// Builds a set from vertex ids of `g`, summing their (original) weights.
    /// Removed vertices are accepted; ids never allocated are not.
    pub fn from_vertices(
        g: &WeightedMultigraph,
        vertices: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self, GraphError> {
        let mut members: Vec<VertexId> = vertices.into_iter().collect();
        if let Some(bad) = members.iter().find(|v| v.0 >= g.id_bound()) {
            return Err(GraphError::UnknownVertex(bad.0));
        }
        members.sort_unstable();
        members.dedup();
        let total_weight = members.iter().map(|&v| g.weight(v)).sum();
        Ok(VertexSet {
            members,
            total_weight,
        })
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn total_weight(&self) -> Weight {
        self.total_weight
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }
}

/// Prunes vertices of degree 0 or 1 to a fixed point, returning the pruned
/// copy and the removed edges in removal order.
pub fn prune_leaves(g: &WeightedMultigraph) -> (WeightedMultigraph, Vec<EdgeId>) {
    let mut pruned = g.clone();
    let removed = pruned.prune_in_place();
    (pruned, removed)
}

/// True iff removing `excluded` (with incident edges) from `g` leaves a forest.
pub fn is_forest(g: &WeightedMultigraph, excluded: &[VertexId]) -> bool {
    g.is_forest_without(excluded)
}

pub fn degree(g: &WeightedMultigraph, v: VertexId) -> Result<usize, GraphError> {
    g.degree(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> WeightedMultigraph {
        let mut g = WeightedMultigraph::new();
        for i in 0..n {
            g.add_vertex(format!("v{i}"), Weight::Finite(1.0));
        }
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v)).unwrap();
        }
        g
    }

    #[test]
    fn path_prunes_to_nothing() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let (p, removed) = prune_leaves(&g);
        assert!(p.is_empty());
        assert_eq!(removed.len(), 2);
    }

    #[test]
    fn triangle_survives_pruning() {
        let g = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        let (p, removed) = prune_leaves(&g);
        assert_eq!(p.vertex_count(), 3);
        assert!(removed.is_empty());
    }

    #[test]
    fn pendant_edge_is_pruned() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        let (p, removed) = prune_leaves(&g);
        assert_eq!(p.vertices().collect::<Vec<_>>(), vec![VertexId(0), VertexId(1), VertexId(2)]);
        assert_eq!(removed, vec![EdgeId(3)]);
        assert_eq!(p.degree(VertexId(2)).unwrap(), 2);
    }

    #[test]
    fn prune_order_follows_leaf_chain() {
        // triangle with a tail 2-3-4: the tail is eaten from the tip
        let g = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        let (_, removed) = prune_leaves(&g);
        assert_eq!(removed, vec![EdgeId(4), EdgeId(3)]);
    }

    #[test]
    fn forest_checks() {
        let tri = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(is_forest(&tri, &[VertexId(0)]));
        assert!(!is_forest(&tri, &[]));
        let parallel = graph(2, &[(0, 1), (0, 1)]);
        assert!(!is_forest(&parallel, &[]));
        assert!(is_forest(&parallel, &[VertexId(1)]));
        let looped = graph(2, &[(0, 0), (0, 1)]);
        assert!(!is_forest(&looped, &[VertexId(1)]));
        assert!(is_forest(&looped, &[VertexId(0)]));
    }

    #[test]
    fn degree_examples() {
        let g = graph(3, &[(0, 1), (0, 1), (0, 0)]);
        assert_eq!(degree(&g, VertexId(2)).unwrap(), 0);
        assert_eq!(degree(&g, VertexId(0)).unwrap(), 4);
        let lone_loop = graph(1, &[(0, 0)]);
        assert_eq!(degree(&lone_loop, VertexId(0)).unwrap(), 2);
    }

    #[test]
    fn vertex_set_sums_and_dedups() {
        let mut g = WeightedMultigraph::new();
        let a = g.add_vertex("a", Weight::Finite(0.5));
        let b = g.add_vertex("b", Weight::Finite(2.0));
        let s = VertexSet::from_vertices(&g, [b, a, b]).unwrap();
        assert_eq!(s.members(), &[a, b]);
        assert_eq!(s.total_weight(), Weight::Finite(2.5));
        assert!(VertexSet::from_vertices(&g, [VertexId(7)]).is_err());
    }

    fn arb_multigraph() -> impl Strategy<Value = WeightedMultigraph> {
        (1usize..9).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n), 0..16).prop_map(move |edges| graph(n, &edges))
        })
    }

    fn arb_graph_and_subsets() -> impl Strategy<Value = (WeightedMultigraph, u16, u16)> {
        (arb_multigraph(), any::<u16>(), any::<u16>())
    }

    fn subset(g: &WeightedMultigraph, mask: u16) -> Vec<VertexId> {
        g.vertices().filter(|v| mask >> v.0 & 1 == 1).collect()
    }

    proptest! {
        #[test]
        fn prune_is_idempotent(g in arb_multigraph()) {
            let (once, _) = prune_leaves(&g);
            let (twice, removed) = prune_leaves(&once);
            prop_assert!(removed.is_empty());
            prop_assert_eq!(once.vertices().collect::<Vec<_>>(), twice.vertices().collect::<Vec<_>>());
            for v in once.vertices() {
                prop_assert!(once.degree(v).unwrap() >= 2);
            }
        }

        #[test]
        fn degree_sum_is_twice_edges(g in arb_multigraph()) {
            let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }

        #[test]
        fn pruning_preserves_feedback_sets((g, mask, _) in arb_graph_and_subsets()) {
            let (pruned, _) = prune_leaves(&g);
            let f = subset(&g, mask);
            let survivors: Vec<VertexId> = f.iter().copied().filter(|&v| pruned.contains(v)).collect();
            prop_assert_eq!(is_forest(&g, &f), is_forest(&pruned, &survivors));
        }

        #[test]
        fn forest_test_is_monotone((g, a, b) in arb_graph_and_subsets()) {
            let small = subset(&g, a);
            let big = subset(&g, a | b);
            if is_forest(&g, &small) {
                prop_assert!(is_forest(&g, &big));
            }
        }
    }
}
