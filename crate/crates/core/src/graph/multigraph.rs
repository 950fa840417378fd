use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{DisjointSets, GraphError, Weight};

/// Vertex handle. Equal to the insertion index, which also drives every
/// tie-break in the solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Edge handle. Never reused after the edge is removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Undirected vertex-weighted multigraph with parallel edges and self-loops.
///
/// Vertices and edges are removed by tombstoning, so ids stay stable and the
/// original weight and endpoints of removed items remain queryable.
#[derive(Clone, Debug, Default)]
pub struct WeightedMultigraph {
    names: Vec<String>,
    weights: Vec<Weight>,
    alive: Vec<bool>,
    degree: Vec<usize>,
    // a self-loop is listed once here but counts 2 towards `degree`
    incident: Vec<Vec<EdgeId>>,
    endpoints: Vec<(VertexId, VertexId)>,
    edge_alive: Vec<bool>,
    live_vertices: usize,
    live_edges: usize,
}

impl WeightedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(vertices: usize, edges: usize) -> Self {
        WeightedMultigraph {
            names: Vec::with_capacity(vertices),
            weights: Vec::with_capacity(vertices),
            alive: Vec::with_capacity(vertices),
            degree: Vec::with_capacity(vertices),
            incident: Vec::with_capacity(vertices),
            endpoints: Vec::with_capacity(edges),
            edge_alive: Vec::with_capacity(edges),
            live_vertices: 0,
            live_edges: 0,
        }
    }

    pub fn add_vertex(&mut self, name: impl Into<String>, weight: Weight) -> VertexId {
        let id = VertexId(self.names.len());
        self.names.push(name.into());
        self.weights.push(weight);
        self.alive.push(true);
        self.degree.push(0);
        self.incident.push(Vec::new());
        self.live_vertices += 1;
        id
    }

    /// Adds an edge between two live vertices. `u == v` adds a self-loop.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        self.check_live(u)?;
        self.check_live(v)?;
        let id = EdgeId(self.endpoints.len());
        self.endpoints.push((u, v));
        self.edge_alive.push(true);
        self.incident[u.0].push(id);
        self.degree[u.0] += 1;
        if u != v {
            self.incident[v.0].push(id);
        }
        self.degree[v.0] += 1;
        self.live_edges += 1;
        Ok(id)
    }

    fn check_live(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v.0))
        }
    }

    /// Number of live vertices.
    pub fn vertex_count(&self) -> usize {
        self.live_vertices
    }

    /// Number of live edges.
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// One past the largest vertex id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.names.len()
    }

    /// One past the largest edge id ever allocated.
    pub fn edge_id_bound(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.live_vertices == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.alive.get(v.0).copied().unwrap_or(false)
    }

    pub fn is_edge_live(&self, e: EdgeId) -> bool {
        self.edge_alive.get(e.0).copied().unwrap_or(false)
    }

    /// Live vertices in insertion order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId(i))
    }

    /// Live edges in insertion order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.endpoints
            .iter()
            .enumerate()
            .filter(|(i, _)| self.edge_alive[*i])
            .map(|(i, &(u, v))| (EdgeId(i), u, v))
    }

    /// Name of any vertex ever allocated, live or removed.
    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    /// Weight of any vertex ever allocated, live or removed.
    pub fn weight(&self, v: VertexId) -> Weight {
        self.weights[v.0]
    }

    pub fn set_weight(&mut self, v: VertexId, weight: Weight) -> Result<(), GraphError> {
        self.check_live(v)?;
        self.weights[v.0] = weight;
        Ok(())
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e.0]
    }

    /// Number of incident edge slots; a self-loop contributes 2.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_live(v)?;
        Ok(self.degree[v.0])
    }

    pub(crate) fn degree_of(&self, v: VertexId) -> usize {
        self.degree[v.0]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree[v.0]).max().unwrap_or(0)
    }

    /// Live edges incident to `v`, each self-loop listed once.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incident[v.0]
            .iter()
            .copied()
            .filter(|e| self.edge_alive[e.0])
    }

    /// Removes `v` and its incident edges, appending them to `removed`.
    pub fn remove_vertex(&mut self, v: VertexId, removed: &mut Vec<EdgeId>) -> Result<(), GraphError> {
        self.check_live(v)?;
        let incident = std::mem::take(&mut self.incident[v.0]);
        for &e in &incident {
            if !self.edge_alive[e.0] {
                continue;
            }
            self.edge_alive[e.0] = false;
            self.live_edges -= 1;
            let (a, b) = self.endpoints[e.0];
            self.degree[a.0] -= 1;
            self.degree[b.0] -= 1;
            removed.push(e);
        }
        self.incident[v.0] = incident;
        self.alive[v.0] = false;
        self.live_vertices -= 1;
        Ok(())
    }

    /// Repeatedly removes vertices of degree 0 or 1 until none remain.
    /// Returns the removed edges in removal order.
    pub fn prune_in_place(&mut self) -> Vec<EdgeId> {
        let seeds: Vec<VertexId> = self.vertices().collect();
        let mut removed = Vec::new();
        self.prune_from(seeds, &mut removed);
        removed
    }

    /// Pruning restricted to the neighbourhood reachable from `seeds`.
    ///
    /// Correct whenever every vertex outside `seeds` already had degree at
    /// least 2, e.g. the endpoints of edges just removed.
    pub(crate) fn prune_from(
        &mut self,
        seeds: impl IntoIterator<Item = VertexId>,
        removed: &mut Vec<EdgeId>,
    ) {
        let mut queue: VecDeque<VertexId> = seeds
            .into_iter()
            .filter(|&v| self.contains(v) && self.degree[v.0] <= 1)
            .collect();
        while let Some(v) = queue.pop_front() {
            if !self.alive[v.0] || self.degree[v.0] > 1 {
                continue;
            }
            let start = removed.len();
            self.remove_vertex(v, removed)
                .expect("queued vertex is live");
            for e in &removed[start..] {
                let (a, b) = self.endpoints[e.0];
                let other = if a == v { b } else { a };
                if self.alive[other.0] && self.degree[other.0] <= 1 {
                    queue.push_back(other);
                }
            }
        }
    }

    /// True iff the live graph minus `excluded` has no cycle. Ids in
    /// `excluded` that are not live are ignored.
    pub fn is_forest_without(&self, excluded: &[VertexId]) -> bool {
        let mut gone = vec![false; self.id_bound()];
        for v in excluded {
            if let Some(slot) = gone.get_mut(v.0) {
                *slot = true;
            }
        }
        let mut sets = DisjointSets::new(self.id_bound());
        for (_, u, v) in self.edges() {
            if gone[u.0] || gone[v.0] {
                continue;
            }
            if u == v || !sets.union(u.0, v.0) {
                return false;
            }
        }
        true
    }
}
