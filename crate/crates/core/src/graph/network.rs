use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("duplicate node `{0}`")]
    DuplicateNode(String),
    #[error("node `{0}` has domain size 0")]
    EmptyDomain(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("self-edge on `{0}`")]
    SelfEdge(String),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),
    #[error("directed cycle through `{0}`")]
    Cycle(String),
}

/// Incrementally assembles a [`DirectedNetwork`]; acyclicity is checked in
/// [`NetworkBuilder::build`].
#[derive(Clone, Debug, Default)]
pub struct NetworkBuilder {
    names: Vec<String>,
    domains: Vec<u64>,
    index: HashMap<String, NodeId>,
    edges: Vec<(NodeId, NodeId)>,
    seen: HashSet<(NodeId, NodeId)>,
}

impl NetworkBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, name: impl Into<String>, domain_size: u64) -> Result<NodeId, NetworkError> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(NetworkError::DuplicateNode(name));
        }
        if domain_size == 0 {
            return Err(NetworkError::EmptyDomain(name));
        }
        let id = NodeId(self.names.len());
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.domains.push(domain_size);
        Ok(id)
    }

    pub fn node(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    pub fn add_edge(&mut self, parent: NodeId, child: NodeId) -> Result<(), NetworkError> {
        let name = |id: NodeId| {
            self.names
                .get(id.0)
                .cloned()
                .ok_or_else(|| NetworkError::UnknownNode(format!("#{}", id.0)))
        };
        let (p, c) = (name(parent)?, name(child)?);
        if parent == child {
            return Err(NetworkError::SelfEdge(p));
        }
        if !self.seen.insert((parent, child)) {
            return Err(NetworkError::DuplicateEdge(p, c));
        }
        self.edges.push((parent, child));
        Ok(())
    }

    pub fn add_edge_by_name(&mut self, parent: &str, child: &str) -> Result<(), NetworkError> {
        let p = self
            .node(parent)
            .ok_or_else(|| NetworkError::UnknownNode(parent.to_string()))?;
        let c = self
            .node(child)
            .ok_or_else(|| NetworkError::UnknownNode(child.to_string()))?;
        self.add_edge(p, c)
    }

    #[allow(clippy::type_complexity)]
    pub(crate) fn parts(&self) -> (Vec<(String, u64)>, Vec<(NodeId, NodeId)>) {
        let nodes = self.names.iter().cloned().zip(self.domains.iter().copied()).collect();
        (nodes, self.edges.clone())
    }

    pub fn build(self) -> Result<DirectedNetwork, NetworkError> {
        let n = self.names.len();
        let mut children = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(p, c) in &self.edges {
            children[p.0].push(c);
            indegree[c.0] += 1;
        }
        // Kahn's algorithm; anything left over sits on a directed cycle
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            order.push(NodeId(v));
            for &c in &children[v] {
                indegree[c.0] -= 1;
                if indegree[c.0] == 0 {
                    stack.push(c.0);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).expect("a node remains");
            return Err(NetworkError::Cycle(self.names[stuck].clone()));
        }
        Ok(DirectedNetwork {
            names: self.names,
            domains: self.domains,
            index: self.index,
            edges: self.edges,
            topological: order,
        })
    }
}

/// An acyclic directed graph whose nodes carry integer domain sizes.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectedNetwork {
    names: Vec<String>,
    domains: Vec<u64>,
    index: HashMap<String, NodeId>,
    edges: Vec<(NodeId, NodeId)>,
    topological: Vec<NodeId>,
}

impl DirectedNetwork {
    pub fn builder() -> NetworkBuilder {
        NetworkBuilder::new()
    }

    /// Builds a network from `(name, domain)` pairs and `(parent, child)`
    /// name pairs.
    pub fn from_parts<'a>(
        nodes: impl IntoIterator<Item = (&'a str, u64)>,
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, NetworkError> {
        let mut b = NetworkBuilder::new();
        for (name, domain) in nodes {
            b.add_node(name, domain)?;
        }
        for (p, c) in edges {
            b.add_edge_by_name(p, c)?;
        }
        b.build()
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.names.len()).map(NodeId)
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn name(&self, v: NodeId) -> &str {
        &self.names[v.0]
    }

    pub fn node(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    pub fn domain_size(&self, v: NodeId) -> u64 {
        self.domains[v.0]
    }

    /// `ln |domain(v)|`; zero for single-valued nodes.
    pub fn log_weight(&self, v: NodeId) -> f64 {
        (self.domains[v.0] as f64).ln()
    }

    pub fn topological_order(&self) -> &[NodeId] {
        &self.topological
    }

    /// Sum of log domain sizes over `nodes`.
    pub fn instances_log(&self, nodes: &[NodeId]) -> f64 {
        nodes.iter().map(|&v| self.log_weight(v)).sum()
    }

    /// Exact product of domain sizes over `nodes`, `None` on `u128` overflow.
    pub fn instance_count(&self, nodes: &[NodeId]) -> Option<u128> {
        nodes
            .iter()
            .try_fold(1u128, |acc, &v| acc.checked_mul(self.domains[v.0] as u128))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_networks() {
        let mut b = NetworkBuilder::new();
        let a = b.add_node("a", 2).unwrap();
        assert_eq!(b.add_node("a", 3), Err(NetworkError::DuplicateNode("a".into())));
        assert_eq!(b.add_node("z", 0), Err(NetworkError::EmptyDomain("z".into())));
        assert_eq!(b.add_edge(a, a), Err(NetworkError::SelfEdge("a".into())));
        assert!(matches!(b.add_edge_by_name("a", "q"), Err(NetworkError::UnknownNode(_))));
        let c = b.add_node("c", 2).unwrap();
        b.add_edge(a, c).unwrap();
        assert!(matches!(b.add_edge(a, c), Err(NetworkError::DuplicateEdge(..))));
    }

    #[test]
    fn detects_directed_cycle() {
        let r = DirectedNetwork::from_parts(
            [("a", 2), ("b", 2), ("c", 2)],
            [("a", "b"), ("b", "c"), ("c", "a")],
        );
        assert!(matches!(r, Err(NetworkError::Cycle(_))));
    }

    #[test]
    fn instance_counts() {
        let d = DirectedNetwork::from_parts([("a", 4), ("b", 3), ("c", 1)], [("a", "b")]).unwrap();
        let all: Vec<NodeId> = d.nodes().collect();
        assert_eq!(d.instance_count(&all), Some(12));
        assert_eq!(d.instance_count(&[]), Some(1));
        assert!((d.instances_log(&all) - 12f64.ln()).abs() < 1e-12);
        assert_eq!(d.log_weight(NodeId(2)), 0.0);
        assert_eq!(d.topological_order()[0], NodeId(0));
    }
}
