//! Greedy approximation algorithms for the weighted feedback vertex set
//! problem.
//!
//! Both algorithms prune the input to its 2-core and then repeatedly remove
//! the vertex of least `weight / degree`, pruning again after every removal.
//! [`run_ga`] uses the original weights throughout. [`run_mga`] debits each
//! removed edge's charge from the working weight of its endpoints and
//! finishes with a redundancy pass that makes the result a minimal feedback
//! set, which brings the worst-case ratio to 2.

mod greedy;
mod ledger;
mod phase2;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_forest, VertexId, VertexSet, Weight, WeightedMultigraph};

pub use ledger::{ChargeLedger, Iteration};
pub use phase2::RedundancyCheck;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("unbreakable cycle: {remaining} remaining vertices all have infinite weight")]
    UnbreakableCycle { remaining: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("enumeration cap of {0} sets exceeded")]
    CapExceeded(usize),
    #[error("graph too large for exhaustive search: {vertices} vertices (limit {limit})")]
    TooLarge { vertices: usize, limit: usize },
    #[error("the given set is not a feedback vertex set")]
    NotFeedbackSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Ga,
    Mga,
    Exact,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Ga => "ga",
            Algorithm::Mga => "mga",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ga" => Ok(Algorithm::Ga),
            "mga" => Ok(Algorithm::Mga),
            "exact" => Ok(Algorithm::Exact),
            other => Err(format!("unknown algorithm `{other}` (expected ga, mga or exact)")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MgaOptions {
    /// Return the phase-one set unchanged.
    pub skip_phase2: bool,
    pub redundancy: RedundancyCheck,
}

/// Output of a feedback-set solve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub set: VertexSet,
    /// Vertices in the order the greedy phase picked them (empty for the
    /// exact oracle).
    pub selected: Vec<VertexId>,
    /// Vertices dropped by the redundancy pass, in scan order.
    pub phase2_removed: Vec<VertexId>,
    pub trace: ChargeLedger,
    /// Maximum degree of the pruned input graph.
    pub max_degree: usize,
}

impl SolveResult {
    pub fn total_weight(&self) -> Weight {
        self.set.total_weight()
    }
}

/// The plain greedy algorithm.
pub fn run_ga(g: &WeightedMultigraph) -> Result<SolveResult, SolveError> {
    let run = greedy::select(g, false)?;
    Ok(SolveResult {
        set: VertexSet::from_vertices(g, run.selected.iter().copied()).expect("ids come from g"),
        selected: run.selected,
        phase2_removed: Vec::new(),
        trace: run.ledger,
        max_degree: run.pruned.max_degree(),
    })
}

/// The modified greedy algorithm with default options.
pub fn run_mga(g: &WeightedMultigraph) -> Result<SolveResult, SolveError> {
    run_mga_with(g, MgaOptions::default())
}

pub fn run_mga_with(g: &WeightedMultigraph, options: MgaOptions) -> Result<SolveResult, SolveError> {
    let run = greedy::select(g, true)?;
    let (kept, dropped) = if options.skip_phase2 {
        (run.selected.clone(), Vec::new())
    } else {
        phase2::remove_redundant(&run.pruned, &run.selected, options.redundancy)
    };
    Ok(SolveResult {
        set: VertexSet::from_vertices(g, kept).expect("ids come from g"),
        selected: run.selected,
        phase2_removed: dropped,
        trace: run.ledger,
        max_degree: run.pruned.max_degree(),
    })
}

/// True iff `f` meets every cycle of `g`.
pub fn verify_fvs(g: &WeightedMultigraph, f: &VertexSet) -> bool {
    is_forest(g, f.members())
}

/// True iff `f` is a feedback set of `g` from which no single vertex can be
/// dropped. Errors if `f` is not a feedback set at all.
pub fn is_minimal_fvs(g: &WeightedMultigraph, f: &VertexSet) -> Result<bool, SolveError> {
    if !verify_fvs(g, f) {
        return Err(SolveError::NotFeedbackSet);
    }
    let members = f.members();
    let mut rest = Vec::with_capacity(members.len().saturating_sub(1));
    for skip in 0..members.len() {
        rest.clear();
        rest.extend(members.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
        if is_forest(g, &rest) {
            return Ok(false);
        }
    }
    Ok(true)
}
