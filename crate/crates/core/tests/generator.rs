use std::collections::HashSet;

use loopcut::exact::{min_loop_cutset, OracleBudget};
use loopcut::generate::InstanceSpec;

#[test]
fn mean_optimum_size_is_in_band() {
    let spec = InstanceSpec::new(15, 25, (2, 2), 1000, 100);
    let total: usize = (0..100)
        .map(|i| {
            let d = spec.network(i).unwrap();
            min_loop_cutset(&d, &OracleBudget::default()).unwrap().nodes.len()
        })
        .sum();
    let mean = total as f64 / 100.0;
    assert!((2.0..=7.0).contains(&mean), "mean optimum size {mean}");
}

#[test]
fn shapes_are_exact_and_seeds_matter() {
    for (n, m) in [(3, 3), (15, 25), (25, 75), (55, 105)] {
        let spec = InstanceSpec::new(n, m, (2, 10), 5, 20);
        let mut seen = HashSet::new();
        for i in 0..20 {
            let d = spec.network(i).unwrap();
            assert_eq!((d.node_count(), d.edge_count()), (n, m));
            let distinct: HashSet<_> = d.edges().iter().collect();
            assert_eq!(distinct.len(), m);
            assert!(d.nodes().all(|v| (2..=10).contains(&d.domain_size(v))));
            assert_eq!(d, spec.network(i).unwrap());
            seen.insert(loopcut::format::write_network(&d));
        }
        if n > 3 {
            assert_eq!(seen.len(), 20);
        }
    }
}

#[test]
fn infeasible_shapes_are_rejected() {
    assert!(InstanceSpec::new(4, 7, (2, 2), 0, 1).network(0).is_err());
    assert!(InstanceSpec::new(4, 3, (3, 2), 0, 1).network(0).is_err());
    assert!(InstanceSpec::new(4, 3, (1, 2), 0, 1).network(0).is_err());
}
