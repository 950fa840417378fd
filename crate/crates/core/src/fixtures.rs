//! Small named graphs used throughout the tests, benches and docs.

use crate::graph::{DirectedNetwork, VertexId, Weight, WeightedMultigraph};

/// Builds a multigraph from `(name, weight)` vertices and index-pair edges.
pub fn multigraph(vertices: &[(&str, Weight)], edges: &[(usize, usize)]) -> WeightedMultigraph {
    let mut g = WeightedMultigraph::with_capacity(vertices.len(), edges.len());
    for (name, w) in vertices {
        g.add_vertex(*name, *w);
    }
    for &(u, v) in edges {
        g.add_edge(VertexId(u), VertexId(v)).expect("fixture edge endpoints exist");
    }
    g
}

fn f(w: f64) -> Weight {
    Weight::Finite(w)
}

/// Triangle `x, y, z` with the given weights.
pub fn triangle(wx: f64, wy: f64, wz: f64) -> WeightedMultigraph {
    multigraph(
        &[("x", f(wx)), ("y", f(wy)), ("z", f(wz))],
        &[(0, 1), (1, 2), (2, 0)],
    )
}

/// Complete graph on `a, b, c, d` with unit weights.
pub fn k4() -> WeightedMultigraph {
    multigraph(
        &[("a", f(1.0)), ("b", f(1.0)), ("c", f(1.0)), ("d", f(1.0))],
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    )
}

/// Two triangles `(a1, a2, h)` and `(b1, b2, h)` sharing `h`, each with an
/// extra parallel edge `a1-a2` / `b1-b2`. Unit weights.
pub fn double_bowtie() -> WeightedMultigraph {
    multigraph(
        &[
            ("a1", f(1.0)),
            ("a2", f(1.0)),
            ("h", f(1.0)),
            ("b1", f(1.0)),
            ("b2", f(1.0)),
        ],
        &[
            (0, 1),
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 4),
            (3, 2),
            (4, 2),
        ],
    )
}

/// `u` and `v` joined by three paths of length 2 through `p1, p2, p3`;
/// `w(u) = w(v) = 1`, `w(p_i) = 0.6`.
pub fn theta() -> WeightedMultigraph {
    multigraph(
        &[
            ("u", f(1.0)),
            ("v", f(1.0)),
            ("p1", f(0.6)),
            ("p2", f(0.6)),
            ("p3", f(0.6)),
        ],
        &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)],
    )
}

/// Directed chain `a -> b -> c`, binary domains.
pub fn chain() -> DirectedNetwork {
    DirectedNetwork::from_parts([("a", 2), ("b", 2), ("c", 2)], [("a", "b"), ("b", "c")])
        .expect("valid fixture")
}

/// `a -> b, b -> c, a -> c`: a single loop whose sink is `c`.
pub fn single_loop(domains: [u64; 3]) -> DirectedNetwork {
    DirectedNetwork::from_parts(
        [("a", domains[0]), ("b", domains[1]), ("c", domains[2])],
        [("a", "b"), ("b", "c"), ("a", "c")],
    )
    .expect("valid fixture")
}

/// `a -> b, a -> c, b -> d, c -> d` with domains `(2, 2, 2, 5)`.
pub fn diamond() -> DirectedNetwork {
    DirectedNetwork::from_parts(
        [("a", 2), ("b", 2), ("c", 2), ("d", 5)],
        [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )
    .expect("valid fixture")
}
