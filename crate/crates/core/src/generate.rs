//! Seeded random Bayesian-network skeletons.
//!
//! A uniformly random permutation fixes the topological order, `m` distinct
//! unordered node pairs are sampled without replacement and oriented along
//! that order, and every node draws a domain size uniformly from the
//! configured range. The stream comes from ChaCha8 seeded with a 64-bit
//! integer; instance `k` of a batch uses seed `base + k` (wrapping).
//! Connectivity is not enforced.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::write_network;
use crate::graph::{DirectedNetwork, NetworkBuilder, NodeId};

/// Name of the pseudo-random generator, recorded in manifests.
pub const GENERATOR: &str = "chacha8";

#[derive(Debug, Error)]
pub enum GenError {
    #[error("infeasible instance: {0}")]
    Infeasible(String),
    #[error("cannot write to {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub domain_lo: u64,
    pub domain_hi: u64,
    pub seed: u64,
    pub count: usize,
}

impl InstanceSpec {
    pub fn new(n_vertices: usize, n_edges: usize, domains: (u64, u64), seed: u64, count: usize) -> Self {
        InstanceSpec {
            n_vertices,
            n_edges,
            domain_lo: domains.0,
            domain_hi: domains.1,
            seed,
            count,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let pairs = self.n_vertices * self.n_vertices.saturating_sub(1) / 2;
        if self.n_vertices == 0 || self.count == 0 {
            return Err(GenError::Infeasible("vertex count and instance count must be positive".into()));
        }
        if self.n_edges > pairs {
            return Err(GenError::Infeasible(format!(
                "{} edges requested but {} vertices allow at most {pairs}",
                self.n_edges, self.n_vertices
            )));
        }
        if self.domain_lo < 2 || self.domain_hi < self.domain_lo {
            return Err(GenError::Infeasible(format!(
                "domain range {}:{} must satisfy 2 <= lo <= hi",
                self.domain_lo, self.domain_hi
            )));
        }
        Ok(())
    }

    pub fn instance_seed(&self, index: usize) -> u64 {
        self.seed.wrapping_add(index as u64)
    }

    /// The `index`-th network of the batch.
    pub fn network(&self, index: usize) -> Result<DirectedNetwork, GenError> {
        self.validate()?;
        Ok(sample(self, self.instance_seed(index)))
    }

    /// `instance <index> <seed> <n> <m> <domain_lo> <domain_hi>`
    pub fn manifest_line(&self, index: usize) -> String {
        format!(
            "instance {index} {} {} {} {} {}",
            self.instance_seed(index),
            self.n_vertices,
            self.n_edges,
            self.domain_lo,
            self.domain_hi
        )
    }

    pub fn file_name(&self, index: usize) -> String {
        format!("inst_{index:05}.net")
    }
}

/// The first network of `spec` (seed `spec.seed`).
pub fn random_dag(spec: &InstanceSpec) -> Result<DirectedNetwork, GenError> {
    spec.network(0)
}

fn sample(spec: &InstanceSpec, seed: u64) -> DirectedNetwork {
    let n = spec.n_vertices;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let domains: Vec<u64> = (0..n)
        .map(|_| rng.gen_range(spec.domain_lo..=spec.domain_hi))
        .collect();
    let total = n * (n - 1) / 2;
    let mut picks = index::sample(&mut rng, total, spec.n_edges).into_vec();
    picks.sort_unstable();

    let mut b = NetworkBuilder::new();
    for (v, &domain) in domains.iter().enumerate() {
        b.add_node(format!("v{v}"), domain).expect("fresh names");
    }
    for pick in picks {
        let (i, j) = decode_pair(pick, n);
        b.add_edge(NodeId(order[i]), NodeId(order[j]))
            .expect("distinct pairs");
    }
    b.build().expect("edges follow a topological order")
}

/// Maps `k` in `0..n(n-1)/2` to the `k`-th pair `(i, j)`, `i < j`, in
/// row-major order.
fn decode_pair(mut k: usize, n: usize) -> (usize, usize) {
    for i in 0..n {
        let row = n - 1 - i;
        if k < row {
            return (i, i + 1 + k);
        }
        k -= row;
    }
    unreachable!("pair index out of range")
}

/// Writes `spec.count` network files plus `manifest.txt` into `dir`.
/// Returns the written network paths.
pub fn write_batch(spec: &InstanceSpec, dir: &Path) -> Result<Vec<PathBuf>, GenError> {
    spec.validate()?;
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |source| GenError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut manifest = format!(
        "# generator={GENERATOR} seed_rule=base+index connectivity=not-enforced\n"
    );
    let mut paths = Vec::with_capacity(spec.count);
    for index in 0..spec.count {
        let network = spec.network(index)?;
        let path = dir.join(spec.file_name(index));
        fs::write(&path, write_network(&network)).map_err(io_err(&path))?;
        writeln!(manifest, "{}", spec.manifest_line(index)).expect("writing to a String");
        paths.push(path);
    }
    let manifest_path = dir.join("manifest.txt");
    fs::write(&manifest_path, manifest).map_err(io_err(&manifest_path))?;
    Ok(paths)
}
