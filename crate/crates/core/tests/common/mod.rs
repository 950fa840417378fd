//! Test-only generators and brute-force oracles. Nothing in here calls the
//! solvers or the split-graph machinery.
#![allow(dead_code)]

use loopcut::graph::{DirectedNetwork, NodeId, VertexId, Weight, WeightedMultigraph};
use loopcut::generate::InstanceSpec;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random multigraph on `n` vertices with `m` edges and weights in (0, 1].
///
/// With `pinned`, roughly a third of the vertices get infinite weight; those
/// form an independent set without self-loops, so every cycle keeps a finite
/// vertex (the shape split graphs have).
pub fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, m: usize, pinned: bool) -> WeightedMultigraph {
    let mut g = WeightedMultigraph::new();
    let mut infinite = vec![false; n];
    for (i, inf) in infinite.iter_mut().enumerate() {
        *inf = pinned && rng.gen_bool(0.35);
        let w = if *inf {
            Weight::Infinite
        } else {
            Weight::Finite(1.0 - rng.gen::<f64>())
        };
        g.add_vertex(format!("v{i}"), w);
    }
    if infinite.iter().all(|&x| x) {
        infinite[0] = false;
        g.set_weight(VertexId(0), Weight::Finite(0.5)).unwrap();
    }
    for _ in 0..m {
        loop {
            let u = rng.gen_range(0..n);
            // self-loops and parallels stay rare but present
            let v = if rng.gen_bool(0.05) { u } else { rng.gen_range(0..n) };
            if infinite[u] && infinite[v] {
                continue;
            }
            g.add_edge(VertexId(u), VertexId(v)).unwrap();
            break;
        }
    }
    g
}

/// Random simple graph on `n` vertices with every degree >= 2 (rejection
/// sampled), unit weights.
pub fn random_min_degree_two(rng: &mut ChaCha8Rng, n: usize) -> WeightedMultigraph {
    loop {
        let p = rng.gen_range(0.3..0.8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let mut deg = vec![0; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().all(|&d| d >= 2) {
            let mut g = WeightedMultigraph::new();
            for i in 0..n {
                g.add_vertex(format!("v{i}"), Weight::Finite(1.0));
            }
            for (u, v) in edges {
                g.add_edge(VertexId(u), VertexId(v)).unwrap();
            }
            return g;
        }
    }
}

pub fn random_network(rng: &mut ChaCha8Rng, max_nodes: usize, extra_edges: usize, domains: (u64, u64)) -> DirectedNetwork {
    let n = rng.gen_range(3..=max_nodes);
    let pairs = n * (n - 1) / 2;
    let m = rng.gen_range(n - 1..=(n - 1 + extra_edges).min(pairs));
    InstanceSpec::new(n, m, domains, rng.gen(), 1).network(0).unwrap()
}

/// All simple cycles (length >= 3) of a simple undirected graph, each listed
/// once as a vertex sequence starting at its smallest vertex.
pub fn simple_cycles(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn extend(adj: &[Vec<usize>], start: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &next in &adj[last] {
            if next == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if next > start && !on_path[next] {
                on_path[next] = true;
                path.push(next);
                extend(adj, start, path, on_path, out);
                path.pop();
                on_path[next] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; adj.len()];
    for start in 0..adj.len() {
        on_path[start] = true;
        let mut path = vec![start];
        extend(adj, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
    }
    out
}

/// Loops of a network: simple cycles of its underlying undirected graph.
pub fn network_loops(d: &DirectedNetwork) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); d.node_count()];
    for &(p, c) in d.edges() {
        adj[p.0].push(c.0);
        adj[c.0].push(p.0);
    }
    simple_cycles(&adj)
}

/// Loop members that are not sinks, i.e. not entered by both loop edges.
pub fn allowed_vertices(d: &DirectedNetwork, cycle: &[usize]) -> Vec<usize> {
    let has_edge = |p: usize, c: usize| d.edges().contains(&(NodeId(p), NodeId(c)));
    let k = cycle.len();
    (0..k)
        .filter(|&i| {
            let v = cycle[i];
            let prev = cycle[(i + k - 1) % k];
            let next = cycle[(i + 1) % k];
            !(has_edge(prev, v) && has_edge(next, v))
        })
        .map(|i| cycle[i])
        .collect()
}

/// The textbook definition: every loop contains an allowed member of `s`.
pub fn is_cutset_by_definition(d: &DirectedNetwork, loops: &[Vec<usize>], s: &[NodeId]) -> bool {
    loops.iter().all(|cycle| {
        allowed_vertices(d, cycle)
            .iter()
            .any(|v| s.contains(&NodeId(*v)))
    })
}

/// Simple-cycle count of a simple multigraph given as live edges.
pub fn count_cycles(g: &WeightedMultigraph) -> usize {
    let mut adj = vec![Vec::new(); g.id_bound()];
    for (_, u, v) in g.edges() {
        adj[u.0].push(v.0);
        adj[v.0].push(u.0);
    }
    simple_cycles(&adj).len()
}

/// Minimum feedback-set weight by enumerating subsets of finite vertices.
pub fn brute_force_optimum(g: &WeightedMultigraph) -> f64 {
    let finite: Vec<VertexId> = g.vertices().filter(|&v| g.weight(v).is_finite()).collect();
    let k = finite.len();
    assert!(k <= 20);
    let mut best = f64::INFINITY;
    for mask in 0u32..1 << k {
        let members: Vec<VertexId> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| finite[i]).collect();
        let w: f64 = members.iter().map(|&v| g.weight(v).value()).sum();
        if w < best && forest_after_removal(g, &members) {
            best = w;
        }
    }
    best
}

/// Independent cycle test: repeatedly strip vertices of degree <= 1; a
/// forest strips to nothing.
pub fn forest_after_removal(g: &WeightedMultigraph, removed: &[VertexId]) -> bool {
    let n = g.id_bound();
    let mut alive: Vec<bool> = (0..n).map(|i| g.contains(VertexId(i)) && !removed.contains(&VertexId(i))).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|(_, u, v)| (u.0, v.0)).collect();
    loop {
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            if alive[u] && alive[v] {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let mut changed = false;
        for i in 0..n {
            if alive[i] && deg[i] <= 1 {
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            return !alive.iter().any(|&a| a);
        }
    }
}
