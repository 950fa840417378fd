//! Batch experiments: solve a directory of networks with several algorithms,
//! optionally against the exact optimum, and tabulate the comparison.
//!
//! Solutions are compared by total weight (the sum of `ln |domain|`); one is
//! better than another when its weight is smaller by more than
//! [`WEIGHT_TOLERANCE`]. Ratios are instance-count ratios against the
//! optimum, `exp(weight - optimum)`.

use std::fs;
use std::io;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::batch::{self, Execution};
use crate::format::parse_network;
use crate::graph::DirectedNetwork;
use crate::reduction::{is_loop_cutset, loop_cutset};
use crate::solver::{Algorithm, SolveError};
use crate::SolveOptions;

pub const WEIGHT_TOLERANCE: f64 = 1e-9;

pub const TSV_COLUMNS: [&str; 7] = [
    "instance",
    "algorithm",
    "set_size",
    "weight",
    "instances_log",
    "ratio",
    "millis",
];

/// A named network to solve.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub network: DirectedNetwork,
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub with_exact: bool,
    pub options: SolveOptions,
    pub execution: Execution,
}

impl ExperimentConfig {
    pub fn new(algorithms: Vec<Algorithm>, with_exact: bool) -> Self {
        ExperimentConfig {
            algorithms,
            with_exact,
            options: SolveOptions::default(),
            execution: Execution::default(),
        }
    }

    /// Requested algorithms in order, with `exact` appended if needed.
    pub fn run_order(&self) -> Vec<Algorithm> {
        let mut order: Vec<Algorithm> = Vec::new();
        for &a in &self.algorithms {
            if !order.contains(&a) {
                order.push(a);
            }
        }
        if self.with_exact && !order.contains(&Algorithm::Exact) {
            order.push(Algorithm::Exact);
        }
        order
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub instance: String,
    pub algorithm: Algorithm,
    pub set_size: Option<usize>,
    pub weight: Option<f64>,
    pub instances_log: Option<f64>,
    pub ratio: Option<f64>,
    pub millis: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    BudgetExceeded,
    UnbreakableCycle,
    SelfCheck,
    Other,
}

impl FailureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureKind::BudgetExceeded => "budget_exceeded",
            FailureKind::UnbreakableCycle => "unbreakable_cycle",
            FailureKind::SelfCheck => "self_check",
            FailureKind::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub algorithm: Algorithm,
    pub kind: FailureKind,
    pub message: String,
}

/// Head-to-head counts between two algorithms over the instances both solved.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairTally {
    pub first: Algorithm,
    pub second: Algorithm,
    pub first_better: usize,
    pub ties: usize,
    pub second_better: usize,
}

impl PairTally {
    pub fn compared(&self) -> usize {
        self.first_better + self.ties + self.second_better
    }
}

/// Instance-count ratios of one algorithm against the optimum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioSummary {
    pub algorithm: Algorithm,
    pub instances: usize,
    pub mean: f64,
    pub geometric_mean: f64,
    pub max: f64,
    /// Instances on which the algorithm matched the optimum weight.
    pub optimal: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SkippedFile {
    pub path: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub algorithms: Vec<Algorithm>,
    pub instances: usize,
    pub rows: Vec<ReportRow>,
    pub pairs: Vec<PairTally>,
    pub ratios: Vec<RatioSummary>,
    pub failures: Vec<Failure>,
    pub skipped: Vec<SkippedFile>,
}

type Outcome = Result<Solved, (FailureKind, String)>;

struct Solved {
    set_size: usize,
    weight: f64,
    instances_log: f64,
}

fn classify(e: &SolveError) -> FailureKind {
    match e {
        SolveError::BudgetExceeded(_) => FailureKind::BudgetExceeded,
        SolveError::UnbreakableCycle { .. } => FailureKind::UnbreakableCycle,
        _ => FailureKind::Other,
    }
}

fn solve_one(
    network: &DirectedNetwork,
    algorithm: Algorithm,
    options: &SolveOptions,
) -> (f64, Outcome) {
    let start = Instant::now();
    let result = loop_cutset(network, algorithm, options);
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let outcome = match result {
        Ok(cut) if is_loop_cutset(network, &cut.nodes) => Ok(Solved {
            set_size: cut.nodes.len(),
            weight: cut.split_result.total_weight().value(),
            instances_log: cut.instances_log,
        }),
        Ok(_) => Err((FailureKind::SelfCheck, "output is not a loop cutset".to_string())),
        Err(e) => Err((classify(&e), e.to_string())),
    };
    (millis, outcome)
}

fn better(a: f64, b: f64) -> bool {
    a < b - WEIGHT_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

fn tied(a: f64, b: f64) -> bool {
    !better(a, b) && !better(b, a)
}

/// Runs every algorithm of `config` on every instance.
pub fn run_instances(instances: &[Instance], config: &ExperimentConfig) -> ExperimentReport {
    let order = config.run_order();
    let solved: Vec<Vec<(f64, Outcome)>> =
        batch::map(instances, config.execution, |inst| {
            order
                .iter()
                .map(|&a| solve_one(&inst.network, a, &config.options))
                .collect()
        });

    let mut index: Vec<usize> = (0..instances.len()).collect();
    index.sort_by(|&a, &b| instances[a].id.cmp(&instances[b].id));

    let exact_slot = order.iter().position(|&a| a == Algorithm::Exact);
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &i in &index {
        let inst = &instances[i];
        let optimum = exact_slot.and_then(|k| solved[i][k].1.as_ref().ok().map(|s| s.weight));
        for (k, &alg) in order.iter().enumerate() {
            let (millis, outcome) = &solved[i][k];
            match outcome {
                Ok(s) => rows.push(ReportRow {
                    instance: inst.id.clone(),
                    algorithm: alg,
                    set_size: Some(s.set_size),
                    weight: Some(s.weight),
                    instances_log: Some(s.instances_log),
                    ratio: optimum.map(|opt| (s.weight - opt).exp().max(1.0)),
                    millis: *millis,
                }),
                Err((kind, message)) => {
                    rows.push(ReportRow {
                        instance: inst.id.clone(),
                        algorithm: alg,
                        set_size: None,
                        weight: None,
                        instances_log: None,
                        ratio: None,
                        millis: *millis,
                    });
                    failures.push(Failure {
                        instance: inst.id.clone(),
                        algorithm: alg,
                        kind: *kind,
                        message: message.clone(),
                    });
                }
            }
        }
    }

    let weight_of = |i: usize, k: usize| solved[i][k].1.as_ref().ok().map(|s| s.weight);
    let mut pairs = Vec::new();
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            let mut tally = PairTally {
                first: order[a],
                second: order[b],
                first_better: 0,
                ties: 0,
                second_better: 0,
            };
            for i in 0..instances.len() {
                if let (Some(wa), Some(wb)) = (weight_of(i, a), weight_of(i, b)) {
                    if better(wa, wb) {
                        tally.first_better += 1;
                    } else if better(wb, wa) {
                        tally.second_better += 1;
                    } else {
                        tally.ties += 1;
                    }
                }
            }
            pairs.push(tally);
        }
    }

    let mut ratios = Vec::new();
    if let Some(ex) = exact_slot {
        for (k, &alg) in order.iter().enumerate() {
            if k == ex {
                continue;
            }
            let mut values = Vec::new();
            let mut optimal = 0;
            for i in 0..instances.len() {
                if let (Some(w), Some(opt)) = (weight_of(i, k), weight_of(i, ex)) {
                    values.push((w - opt).exp().max(1.0));
                    if tied(w, opt) {
                        optimal += 1;
                    }
                }
            }
            let n = values.len();
            let (mean, geometric_mean, max) = if n == 0 {
                (f64::NAN, f64::NAN, f64::NAN)
            } else {
                (
                    values.iter().sum::<f64>() / n as f64,
                    (values.iter().map(|r| r.ln()).sum::<f64>() / n as f64).exp(),
                    values.iter().copied().fold(1.0, f64::max),
                )
            };
            ratios.push(RatioSummary {
                algorithm: alg,
                instances: n,
                mean,
                geometric_mean,
                max,
                optimal,
            });
        }
    }

    ExperimentReport {
        algorithms: order,
        instances: instances.len(),
        rows,
        pairs,
        ratios,
        failures,
        skipped: Vec::new(),
    }
}

/// Reads every `*.net` file of `dir` (sorted by name). Unreadable or
/// malformed files are returned separately instead of aborting the batch.
pub fn load_instances(dir: &Path) -> io::Result<(Vec<Instance>, Vec<SkippedFile>)> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "net"))
        .collect();
    paths.sort();
    let mut instances = Vec::new();
    let mut skipped = Vec::new();
    for path in paths {
        let parsed = fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|text| parse_network(&text).map_err(|e| e.to_string()));
        match parsed {
            Ok(network) => instances.push(Instance {
                id: path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default(),
                network,
            }),
            Err(message) => skipped.push(SkippedFile {
                path: path.display().to_string(),
                message,
            }),
        }
    }
    Ok((instances, skipped))
}

/// Loads a directory of network files and runs the experiment on it.
pub fn run_experiment(dir: &Path, config: &ExperimentConfig) -> io::Result<ExperimentReport> {
    let (instances, skipped) = load_instances(dir)?;
    let mut report = run_instances(&instances, config);
    report.skipped = skipped;
    Ok(report)
}

fn opt_cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "NA".to_string(), |x| x.to_string())
}

impl ExperimentReport {
    pub fn pair(&self, first: Algorithm, second: Algorithm) -> Option<&PairTally> {
        self.pairs
            .iter()
            .find(|p| p.first == first && p.second == second)
    }

    pub fn ratio(&self, algorithm: Algorithm) -> Option<&RatioSummary> {
        self.ratios.iter().find(|r| r.algorithm == algorithm)
    }

    pub fn count_failures(&self, kind: FailureKind) -> usize {
        self.failures.iter().filter(|f| f.kind == kind).count()
    }

    /// Tab-separated table followed by `#`-prefixed summary records.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line("# loopcut experiment report".into());
        line(format!(
            "# comparison: lower total weight (sum of ln domain sizes) wins; tolerance {WEIGHT_TOLERANCE:e}"
        ));
        line(TSV_COLUMNS.join("\t"));
        for r in &self.rows {
            line(format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.instance,
                r.algorithm,
                opt_cell(r.set_size),
                opt_cell(r.weight),
                opt_cell(r.instances_log),
                opt_cell(r.ratio),
                r.millis
            ));
        }
        for p in &self.pairs {
            line(format!(
                "# pair\t{}\t{}\t{}\t{}\t{}",
                p.first, p.second, p.first_better, p.ties, p.second_better
            ));
        }
        for r in &self.ratios {
            line(format!(
                "# ratio\t{}\t{}\t{}\t{}\t{}\t{}",
                r.algorithm, r.instances, r.mean, r.geometric_mean, r.max, r.optimal
            ));
        }
        for f in &self.failures {
            line(format!(
                "# failure\t{}\t{}\t{}\t{}",
                f.instance,
                f.algorithm,
                f.kind.as_str(),
                f.message.replace(['\t', '\n'], " ")
            ));
        }
        for s in &self.skipped {
            line(format!(
                "# skipped\t{}\t{}",
                s.path,
                s.message.replace(['\t', '\n'], " ")
            ));
        }
        let algs: Vec<&str> = self.algorithms.iter().map(|a| a.as_str()).collect();
        line(format!("# algorithms\t{}", algs.join(",")));
        line(format!("# instances\t{}", self.instances));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
