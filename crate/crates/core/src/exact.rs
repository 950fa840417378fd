//! Exact minimum-weight feedback vertex sets for small graphs.
//!
//! [`min_wvfs`] is a branch-and-bound over shortest cycles with a
//! disjoint-cycle-packing lower bound. [`min_wvfs_exhaustive`] enumerates
//! subsets directly and is kept as an independent cross-check.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{is_forest, DirectedNetwork, EdgeId, VertexId, VertexSet, Weight, WeightedMultigraph};
use crate::reduction::{loop_cutset, LoopCutset};
use crate::solver::{Algorithm, ChargeLedger, SolveError, SolveResult};
use crate::SolveOptions;

/// Limits for the exact search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    /// Maximum number of finite-weight vertices left after leaf pruning.
    pub max_vertices: usize,
    /// Maximum number of search nodes.
    pub max_nodes_expanded: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 25,
            max_nodes_expanded: 20_000_000,
        }
    }
}

/// Largest candidate count accepted by [`min_wvfs_exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 20;
/// Largest vertex count accepted by [`enumerate_minimal_fvs`].
pub const ENUMERATION_LIMIT: usize = 12;

const EPS: f64 = 1e-12;

fn exact_result(g: &WeightedMultigraph, members: Vec<VertexId>) -> SolveResult {
    let max_degree = crate::graph::prune_leaves(g).0.max_degree();
    SolveResult {
        set: VertexSet::from_vertices(g, members).expect("ids come from g"),
        selected: Vec::new(),
        phase2_removed: Vec::new(),
        trace: ChargeLedger::default(),
        max_degree,
    }
}

fn finite_vertices(g: &WeightedMultigraph) -> Vec<VertexId> {
    g.vertices().filter(|&v| g.weight(v).is_finite()).collect()
}

/// A minimum-weight feedback vertex set of `g`.
pub fn min_wvfs(g: &WeightedMultigraph, budget: &OracleBudget) -> Result<SolveResult, SolveError> {
    let mut core = g.clone();
    core.prune_in_place();
    let candidates = finite_vertices(&core);
    if !is_forest(&core, &candidates) {
        return Err(SolveError::UnbreakableCycle {
            remaining: core.vertex_count(),
        });
    }
    if candidates.len() > budget.max_vertices {
        return Err(SolveError::BudgetExceeded(format!(
            "{} finite-weight vertices after pruning, limit {}",
            candidates.len(),
            budget.max_vertices
        )));
    }
    let mut search = Search {
        best_weight: candidates.iter().map(|&v| core.weight(v).value()).sum::<f64>(),
        best: candidates,
        expanded: 0,
        limit: budget.max_nodes_expanded,
    };
    let mut chosen = Vec::new();
    search.branch(core, &mut chosen, 0.0)?;
    Ok(exact_result(g, search.best))
}

struct Search {
    best: Vec<VertexId>,
    best_weight: f64,
    expanded: u64,
    limit: u64,
}

impl Search {
    fn branch(
        &mut self,
        mut g: WeightedMultigraph,
        chosen: &mut Vec<VertexId>,
        weight: f64,
    ) -> Result<(), SolveError> {
        self.expanded += 1;
        if self.expanded > self.limit {
            return Err(SolveError::BudgetExceeded(format!(
                "more than {} search nodes",
                self.limit
            )));
        }
        g.prune_in_place();
        if g.is_empty() {
            if weight < self.best_weight - EPS {
                self.best_weight = weight;
                self.best = chosen.clone();
            }
            return Ok(());
        }
        let Some(bound) = packing_bound(&g) else {
            // some cycle has no finite vertex left
            return Ok(());
        };
        if weight + bound >= self.best_weight - EPS {
            return Ok(());
        }
        let cycle = shortest_cycle(&g).expect("pruned nonempty graph has a cycle");
        let mut options: Vec<VertexId> = cycle
            .into_iter()
            .filter(|&v| g.weight(v).is_finite())
            .collect();
        options.sort_by(|&a, &b| g.weight(a).value().total_cmp(&g.weight(b).value()).then(a.cmp(&b)));
        options.dedup();

        // branch j takes options[j] and forbids options[..j]
        for (j, &pick) in options.iter().enumerate() {
            let mut child = g.clone();
            for &banned in &options[..j] {
                child.set_weight(banned, Weight::Infinite).expect("live");
            }
            let w = g.weight(pick).value();
            let mut scratch = Vec::new();
            child.remove_vertex(pick, &mut scratch).expect("live");
            chosen.push(pick);
            self.branch(child, chosen, weight + w)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Sum over a greedy packing of vertex-disjoint cycles of each cycle's
/// lightest finite vertex. `None` if some cycle has only infinite vertices.
fn packing_bound(g: &WeightedMultigraph) -> Option<f64> {
    let mut h = g.clone();
    let mut bound = 0.0;
    let mut scratch = Vec::new();
    loop {
        h.prune_in_place();
        let Some(cycle) = shortest_cycle(&h) else {
            return Some(bound);
        };
        let lightest = cycle
            .iter()
            .map(|&v| h.weight(v))
            .filter(|w| w.is_finite())
            .map(Weight::value)
            .fold(f64::INFINITY, f64::min);
        if lightest.is_infinite() {
            return None;
        }
        bound += lightest;
        for v in cycle {
            scratch.clear();
            h.remove_vertex(v, &mut scratch).expect("cycle vertices are live");
        }
    }
}

/// Vertices of a shortest cycle of the live graph, if any.
pub(crate) fn shortest_cycle(g: &WeightedMultigraph) -> Option<Vec<VertexId>> {
    let mut best: Option<Vec<VertexId>> = None;
    // parallel pairs and self-loops first: they are as short as it gets
    let mut seen_pair = std::collections::HashSet::new();
    for (_, u, v) in g.edges() {
        if u == v {
            return Some(vec![u]);
        }
        let key = (u.min(v), u.max(v));
        if !seen_pair.insert(key) && best.is_none() {
            best = Some(vec![key.0, key.1]);
        }
    }
    if best.is_some() {
        return best;
    }
    let bound = g.id_bound();
    let mut dist = vec![usize::MAX; bound];
    let mut via: Vec<Option<(VertexId, EdgeId)>> = vec![None; bound];
    let mut queue = VecDeque::new();
    for (e, u, v) in g.edges() {
        // shortest u-v path avoiding e closes the shortest cycle through e
        let limit = best.as_ref().map_or(usize::MAX, |c| c.len());
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        via.iter_mut().for_each(|p| *p = None);
        queue.clear();
        dist[u.0] = 0;
        queue.push_back(u);
        'bfs: while let Some(x) = queue.pop_front() {
            if dist[x.0] + 2 > limit {
                break;
            }
            for f in g.incident_edges(x) {
                if f == e {
                    continue;
                }
                let (a, b) = g.endpoints(f);
                let y = if a == x { b } else { a };
                if dist[y.0] != usize::MAX {
                    continue;
                }
                dist[y.0] = dist[x.0] + 1;
                via[y.0] = Some((x, f));
                if y == v {
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
        if dist[v.0] != usize::MAX && dist[v.0] + 1 < limit {
            let mut cycle = vec![v];
            let mut cur = v;
            while let Some((prev, _)) = via[cur.0] {
                cycle.push(prev);
                cur = prev;
            }
            best = Some(cycle);
        }
    }
    best
}

/// Minimum-weight feedback vertex set by plain subset enumeration over the
/// finite-weight live vertices (no pruning, no bounding).
pub fn min_wvfs_exhaustive(g: &WeightedMultigraph) -> Result<SolveResult, SolveError> {
    let candidates = finite_vertices(g);
    let k = candidates.len();
    if k > EXHAUSTIVE_LIMIT {
        return Err(SolveError::TooLarge {
            vertices: k,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let weights: Vec<f64> = candidates.iter().map(|&v| g.weight(v).value()).collect();
    let mut best: Option<(f64, u32)> = None;
    let mut members = Vec::with_capacity(k);
    for mask in 0u32..(1u32 << k) {
        let w: f64 = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| weights[i]).sum();
        if best.is_some_and(|(bw, _)| w >= bw) {
            continue;
        }
        members.clear();
        members.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| candidates[i]));
        if is_forest(g, &members) {
            best = Some((w, mask));
        }
    }
    let (_, mask) = best.ok_or(SolveError::UnbreakableCycle {
        remaining: g.vertex_count(),
    })?;
    let chosen = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| candidates[i]).collect();
    Ok(exact_result(g, chosen))
}

/// Minimum-weight loop cutset of `d`.
pub fn min_loop_cutset(d: &DirectedNetwork, budget: &OracleBudget) -> Result<LoopCutset, SolveError> {
    let options = SolveOptions {
        budget: *budget,
        ..SolveOptions::default()
    };
    loop_cutset(d, Algorithm::Exact, &options)
}

/// Every inclusion-minimal feedback vertex set of `g` (weights ignored),
/// ordered by size and then by member ids.
pub fn enumerate_minimal_fvs(g: &WeightedMultigraph, cap: usize) -> Result<Vec<VertexSet>, SolveError> {
    let vertices: Vec<VertexId> = g.vertices().collect();
    let n = vertices.len();
    if n > ENUMERATION_LIMIT {
        return Err(SolveError::TooLarge {
            vertices: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let subset = |mask: usize| -> Vec<VertexId> {
        (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| vertices[i]).collect()
    };
    let feedback: Vec<bool> = (0..1usize << n).map(|m| is_forest(g, &subset(m))).collect();
    let mut masks: Vec<usize> = (0..1usize << n)
        .filter(|&m| feedback[m] && (0..n).all(|i| m >> i & 1 == 0 || !feedback[m & !(1 << i)]))
        .collect();
    if masks.len() > cap {
        return Err(SolveError::CapExceeded(cap));
    }
    masks.sort_by_key(|&m| (m.count_ones(), subset(m)));
    Ok(masks
        .into_iter()
        .map(|m| VertexSet::from_vertices(g, subset(m)).expect("ids come from g"))
        .collect())
}
