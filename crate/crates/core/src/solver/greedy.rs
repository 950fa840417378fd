use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use super::ledger::{ChargeLedger, Iteration};
use super::SolveError;
use crate::graph::{cmp_ratio, VertexId, Weight, WeightedMultigraph};

/// Heap entry keyed on `weight / degree`, ties broken by vertex id.
#[derive(Clone, Copy, Debug)]
struct Candidate {
    weight: Weight,
    degree: usize,
    vertex: VertexId,
    stamp: u32,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Candidate {}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_ratio(self.weight, self.degree, other.weight, other.degree)
            .then(self.vertex.cmp(&other.vertex))
            .then(self.stamp.cmp(&other.stamp))
    }
}

/// Min-ratio queue with lazy invalidation: every key change pushes a fresh
/// entry and bumps the vertex stamp, stale entries are skipped on pop.
struct RatioQueue {
    heap: BinaryHeap<Reverse<Candidate>>,
    stamps: Vec<u32>,
}

impl RatioQueue {
    fn new(bound: usize) -> Self {
        RatioQueue {
            heap: BinaryHeap::with_capacity(bound),
            stamps: vec![0; bound],
        }
    }

    fn update(&mut self, vertex: VertexId, weight: Weight, degree: usize) {
        let stamp = &mut self.stamps[vertex.0];
        *stamp = stamp.wrapping_add(1);
        self.heap.push(Reverse(Candidate {
            weight,
            degree,
            vertex,
            stamp: *stamp,
        }));
    }

    fn pop_live(&mut self, g: &WeightedMultigraph) -> Option<Candidate> {
        while let Some(Reverse(c)) = self.heap.pop() {
            if g.contains(c.vertex) && self.stamps[c.vertex.0] == c.stamp {
                return Some(c);
            }
        }
        None
    }
}

/// Outcome of the greedy selection phase shared by GA and MGA.
pub(crate) struct GreedyRun {
    /// The input after the initial leaf pruning.
    pub pruned: WeightedMultigraph,
    pub selected: Vec<VertexId>,
    pub ledger: ChargeLedger,
}

/// Repeatedly picks the live vertex of minimum `weight / degree`, removes it
/// and prunes the leaves it leaves behind. With `discharge`, every removed
/// edge also debits its charge from the working weight of both endpoints.
pub(crate) fn select(g: &WeightedMultigraph, discharge: bool) -> Result<GreedyRun, SolveError> {
    let mut work = g.clone();
    work.prune_in_place();
    let pruned = work.clone();

    let mut weights: Vec<Weight> = (0..g.id_bound()).map(|i| g.weight(VertexId(i))).collect();
    let mut queue = RatioQueue::new(g.id_bound());
    for v in work.vertices() {
        queue.update(v, weights[v.0], work.degree_of(v));
    }

    let mut ledger = ChargeLedger::with_edge_bound(g.edge_id_bound());
    let mut selected = Vec::new();
    let mut removed = Vec::new();
    let mut touched = Vec::new();

    while !work.is_empty() {
        let pick = queue
            .pop_live(&work)
            .expect("every live vertex has a current queue entry");
        let Weight::Finite(weight) = pick.weight else {
            return Err(SolveError::UnbreakableCycle {
                remaining: work.vertex_count(),
            });
        };
        debug_assert_eq!(pick.degree, work.degree_of(pick.vertex));
        let ratio = weight / pick.degree as f64;

        removed.clear();
        work.remove_vertex(pick.vertex, &mut removed)
            .expect("picked vertex is live");
        let own = removed.len();
        let neighbours: Vec<VertexId> = removed
            .iter()
            .map(|&e| {
                let (a, b) = work.endpoints(e);
                if a == pick.vertex {
                    b
                } else {
                    a
                }
            })
            .collect();
        work.prune_from(neighbours, &mut removed);
        debug_assert!(removed.len() >= own);

        touched.clear();
        for &e in &removed {
            let (a, b) = work.endpoints(e);
            if discharge {
                weights[a.0] = weights[a.0].discharge(ratio);
                weights[b.0] = weights[b.0].discharge(ratio);
            }
            touched.push(a);
            touched.push(b);
        }
        touched.sort_unstable();
        touched.dedup();
        for &v in &touched {
            if work.contains(v) {
                queue.update(v, weights[v.0], work.degree_of(v));
            }
        }

        selected.push(pick.vertex);
        ledger.record(Iteration {
            vertex: pick.vertex,
            weight,
            degree: pick.degree,
            ratio,
            charged_edges: removed.clone(),
        });
    }

    Ok(GreedyRun {
        pruned,
        selected,
        ledger,
    })
}
