mod common;

use loopcut::exact::{min_loop_cutset, OracleBudget};
use loopcut::graph::{NodeId, Weight};
use loopcut::reduction::{is_loop_cutset, loop_cutset, split, Side};
use loopcut::{Algorithm, SolveOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn every_loop_survives_the_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let d = common::random_network(&mut rng, 9, 6, (2, 4));
        let (g, _) = split(&d);
        let loops = common::network_loops(&d).len();
        // a split cycle may visit both halves of a node, so only >= holds
        assert!(common::count_cycles(&g) >= loops);
        assert_eq!(loops == 0, common::forest_after_removal(&g, &[]));
    }
}

#[test]
fn every_algorithm_returns_a_valid_cutset() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let opts = SolveOptions::default();
    for _ in 0..200 {
        let d = common::random_network(&mut rng, 12, 10, (2, 6));
        let exact = loop_cutset(&d, Algorithm::Exact, &opts).unwrap();
        let mga = loop_cutset(&d, Algorithm::Mga, &opts).unwrap();
        let ga = loop_cutset(&d, Algorithm::Ga, &opts).unwrap();
        let (_, map) = split(&d);
        for cut in [&exact, &mga, &ga] {
            assert!(is_loop_cutset(&d, &cut.nodes));
            // never an infinite-weight in-half
            for v in cut.split_result.set.iter() {
                assert_eq!(map.origin(v).unwrap().1, Side::Out);
            }
            assert!((cut.split_result.total_weight().value() - cut.instances_log).abs() < 1e-9);
        }
        let (e, m) = (exact.instances_log, mga.instances_log);
        assert!(e <= m + 1e-9);
        assert!(m <= 2.0 * e + 1e-9);
    }
}

#[test]
fn exact_cutset_beats_random_valid_cutsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let d = common::random_network(&mut rng, 10, 8, (2, 8));
        let best = min_loop_cutset(&d, &OracleBudget::default()).unwrap();
        for _ in 0..30 {
            let s: Vec<NodeId> = d.nodes().filter(|_| rng.gen_bool(0.5)).collect();
            if is_loop_cutset(&d, &s) {
                assert!(best.instances_log <= d.instances_log(&s) + 1e-9);
            }
        }
    }
}

#[test]
fn split_weights_follow_domains() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let d = common::random_network(&mut rng, 10, 5, (2, 10));
    let (g, map) = split(&d);
    assert_eq!(g.vertex_count(), 2 * d.node_count());
    assert_eq!(g.edge_count(), d.node_count() + d.edge_count());
    for v in d.nodes() {
        assert_eq!(g.weight(map.in_vertex(v)), Weight::Infinite);
        assert_eq!(g.weight(map.out_vertex(v)), Weight::Finite((d.domain_size(v) as f64).ln()));
    }
}
