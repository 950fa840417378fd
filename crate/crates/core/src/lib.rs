//! Loop cutsets for Bayesian networks through weighted feedback vertex sets.
//!
//! A network is split into an undirected weighted graph ([`reduction::split`])
//! whose feedback vertex sets map back onto loop cutsets. Feedback sets come
//! from the greedy algorithm ([`solver::run_ga`]), the modified greedy
//! algorithm with its factor-2 guarantee ([`solver::run_mga`]), or the exact
//! branch-and-bound oracle for small instances ([`exact::min_wvfs`]).
//!
//! ```
//! use loopcut::{fixtures, reduction::loop_cutset, solver::Algorithm, SolveOptions};
//!
//! let network = fixtures::diamond();
//! let cut = loop_cutset(&network, Algorithm::Mga, &SolveOptions::default()).unwrap();
//! assert_eq!(cut.names(&network), ["a"]);
//! assert_eq!(cut.instance_count, Some(2));
//! ```

pub mod batch;
pub mod exact;
pub mod experiment;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod reduction;
pub mod solver;

use serde::{Deserialize, Serialize};

pub use exact::OracleBudget;
pub use graph::{DirectedNetwork, VertexId, VertexSet, Weight, WeightedMultigraph};
pub use solver::{Algorithm, MgaOptions, SolveError, SolveResult};

/// Knobs shared by every entry point that dispatches on [`Algorithm`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    pub mga: MgaOptions,
    pub budget: OracleBudget,
}

/// Solves the weighted feedback vertex set problem on `g` with `algorithm`.
pub fn solve(
    g: &WeightedMultigraph,
    algorithm: Algorithm,
    options: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    match algorithm {
        Algorithm::Ga => solver::run_ga(g),
        Algorithm::Mga => solver::run_mga_with(g, options.mga),
        Algorithm::Exact => exact::min_wvfs(g, &options.budget),
    }
}
