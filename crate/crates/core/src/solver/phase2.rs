use serde::{Deserialize, Serialize};

use crate::graph::{is_forest, DisjointSets, VertexId, WeightedMultigraph};

/// How the redundancy pass decides whether a picked vertex can be dropped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum RedundancyCheck {
    /// Grows a union-find over the graph minus the feedback set, re-adding
    /// vertices in reverse pick order. Near-linear overall.
    #[default]
    UnionFind,
    /// Re-runs the forest test for every candidate. Quadratic; kept as a
    /// cross-check.
    Retest,
}

/// Scans `selected` from last to first and drops every vertex whose removal
/// still leaves a feedback set of `pruned`. Returns `(kept, dropped)`, both
/// in pick order for `kept` and scan order for `dropped`.
pub(crate) fn remove_redundant(
    pruned: &WeightedMultigraph,
    selected: &[VertexId],
    check: RedundancyCheck,
) -> (Vec<VertexId>, Vec<VertexId>) {
    let mut in_set = vec![false; pruned.id_bound()];
    for v in selected {
        in_set[v.0] = true;
    }
    let mut dropped = Vec::new();

    match check {
        RedundancyCheck::Retest => {
            for &v in selected.iter().rev() {
                in_set[v.0] = false;
                let rest: Vec<VertexId> = selected.iter().copied().filter(|u| in_set[u.0]).collect();
                if is_forest(pruned, &rest) {
                    dropped.push(v);
                } else {
                    in_set[v.0] = true;
                }
            }
        }
        RedundancyCheck::UnionFind => {
            let mut sets = DisjointSets::new(pruned.id_bound());
            for (_, a, b) in pruned.edges() {
                if !in_set[a.0] && !in_set[b.0] {
                    let merged = sets.union(a.0, b.0);
                    debug_assert!(merged, "input is not a feedback set");
                }
            }
            let mut roots = Vec::new();
            for &v in selected.iter().rev() {
                // v may leave the set iff its edges into the current forest
                // land in pairwise distinct trees and none is a self-loop
                roots.clear();
                let mut closes_cycle = false;
                for e in pruned.incident_edges(v) {
                    let (a, b) = pruned.endpoints(e);
                    if a == b {
                        closes_cycle = true;
                        break;
                    }
                    let other = if a == v { b } else { a };
                    if !in_set[other.0] {
                        roots.push(sets.find(other.0));
                    }
                }
                if !closes_cycle {
                    roots.sort_unstable();
                    closes_cycle = roots.windows(2).any(|w| w[0] == w[1]);
                }
                if !closes_cycle {
                    in_set[v.0] = false;
                    for &r in &roots {
                        sets.union(v.0, r);
                    }
                    dropped.push(v);
                }
            }
        }
    }

    let kept = selected.iter().copied().filter(|v| in_set[v.0]).collect();
    (kept, dropped)
}
