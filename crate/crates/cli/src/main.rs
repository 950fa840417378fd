//! `loopcut` command-line tool.
//!
//! Exit codes: 0 success, 1 bad input or arguments, 2 solver failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use loopcut::batch::Execution;
use loopcut::experiment::{run_experiment, ExperimentConfig};
use loopcut::format::{parse_graph, parse_network};
use loopcut::generate::{write_batch, InstanceSpec};
use loopcut::reduction::{is_loop_cutset, loop_cutset, split};
use loopcut::solver::verify_fvs;
use loopcut::{solve, Algorithm, SolveOptions, SolveResult, WeightedMultigraph};
use serde_json::json;

#[derive(Parser)]
#[command(name = "loopcut", version, about = "Loop cutsets and weighted feedback vertex sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one graph or network file.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "network")]
        kind: Kind,
        #[arg(long, default_value = "mga")]
        algorithm: Algorithm,
        /// Keep every greedily picked vertex (MGA only).
        #[arg(long)]
        skip_phase2: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Print the per-iteration selection ratios.
        #[arg(long)]
        trace: bool,
    },
    /// Write a batch of random networks and a manifest.
    Gen {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        edges: usize,
        /// Domain size range, `LO:HI`.
        #[arg(long, value_parser = parse_domains, default_value = "2:2")]
        domains: (u64, u64),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve every `*.net` file of a directory and compare algorithms.
    Experiment {
        #[arg(long)]
        dir: PathBuf,
        /// Comma-separated list, e.g. `ga,mga`.
        #[arg(long, value_delimiter = ',', default_value = "ga,mga")]
        algorithms: Vec<Algorithm>,
        /// Also run the exact oracle and report ratios against it.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Network,
    Graph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

fn parse_domains(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("invalid domain size `{t}`"));
    Ok((num(lo)?, num(hi)?))
}

enum Failure {
    Input(String),
    Solver(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Input(m) => {
                eprintln!("error: {m}");
                ExitCode::from(1)
            }
            Failure::Solver(m) => {
                eprintln!("solver error: {m}");
                ExitCode::from(2)
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

struct Solved {
    members: Vec<String>,
    weight: f64,
    instances_log: Option<f64>,
    instance_count: Option<Option<u128>>,
    result: SolveResult,
    graph: WeightedMultigraph,
}

fn run_solve(input: &Path, kind: Kind, algorithm: Algorithm, options: &SolveOptions) -> Result<Solved, Failure> {
    let text = read(input)?;
    let at = |e: loopcut::format::ParseError| Failure::Input(format!("{}: {e}", input.display()));
    match kind {
        Kind::Graph => {
            let g = parse_graph(&text).map_err(at)?;
            let result = solve(&g, algorithm, options).map_err(|e| Failure::Solver(e.to_string()))?;
            if !verify_fvs(&g, &result.set) {
                return Err(Failure::Solver("self-check failed: output is not a feedback set".into()));
            }
            Ok(Solved {
                members: result.set.iter().map(|v| g.name(v).to_string()).collect(),
                weight: result.total_weight().value(),
                instances_log: None,
                instance_count: None,
                result,
                graph: g,
            })
        }
        Kind::Network => {
            let d = parse_network(&text).map_err(at)?;
            let cut = loop_cutset(&d, algorithm, options).map_err(|e| Failure::Solver(e.to_string()))?;
            if !is_loop_cutset(&d, &cut.nodes) {
                return Err(Failure::Solver("self-check failed: output is not a loop cutset".into()));
            }
            Ok(Solved {
                members: cut.names(&d).into_iter().map(String::from).collect(),
                weight: cut.split_result.total_weight().value(),
                instances_log: Some(cut.instances_log),
                instance_count: Some(cut.instance_count),
                result: cut.split_result,
                graph: split(&d).0,
            })
        }
    }
}

fn count_cell(c: Option<u128>) -> String {
    c.map_or_else(|| "overflow".to_string(), |n| n.to_string())
}

fn print_solved(s: &Solved, algorithm: Algorithm, format: Format, trace: bool) {
    let steps = s.result.trace.iterations();
    match format {
        Format::Tsv => {
            println!("algorithm\t{algorithm}");
            println!("members\t{}", s.members.join(","));
            println!("size\t{}", s.members.len());
            println!("weight\t{}", s.weight);
            if let (Some(log), Some(count)) = (s.instances_log, s.instance_count) {
                println!("instances_log\t{log}");
                println!("instances\t{}", count_cell(count));
            }
            if trace {
                println!("# step\tvertex\tweight\tdegree\tratio\tcharged_edges");
                for (i, it) in steps.iter().enumerate() {
                    println!(
                        "# {}\t{}\t{}\t{}\t{}\t{}",
                        i + 1,
                        s.graph.name(it.vertex),
                        it.weight,
                        it.degree,
                        it.ratio,
                        it.charged_edges.len()
                    );
                }
            }
        }
        Format::Json => {
            let mut out = json!({
                "algorithm": algorithm,
                "members": s.members,
                "size": s.members.len(),
                "weight": s.weight,
            });
            if let (Some(log), Some(count)) = (s.instances_log, s.instance_count) {
                out["instances_log"] = json!(log);
                out["instances"] = json!(count.map(|n| n.to_string()));
            }
            if trace {
                out["trace"] = steps
                    .iter()
                    .map(|it| {
                        json!({
                            "vertex": s.graph.name(it.vertex),
                            "weight": it.weight,
                            "degree": it.degree,
                            "ratio": it.ratio,
                            "charged_edges": it.charged_edges.len(),
                        })
                    })
                    .collect();
            }
            println!("{}", serde_json::to_string_pretty(&out).expect("value serializes"));
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            input,
            kind,
            algorithm,
            skip_phase2,
            format,
            trace,
        } => {
            let mut options = SolveOptions::default();
            options.mga.skip_phase2 = skip_phase2;
            let solved = run_solve(&input, kind, algorithm, &options)?;
            print_solved(&solved, algorithm, format, trace);
        }
        Command::Gen {
            nodes,
            edges,
            domains,
            seed,
            count,
            out,
        } => {
            let spec = InstanceSpec::new(nodes, edges, domains, seed, count);
            let files = write_batch(&spec, &out).map_err(|e| Failure::Input(e.to_string()))?;
            eprintln!("wrote {} networks to {}", files.len(), out.display());
        }
        Command::Experiment {
            dir,
            algorithms,
            exact,
            format,
            sequential,
        } => {
            let mut config = ExperimentConfig::new(algorithms, exact);
            if sequential {
                config.execution = Execution::Sequential;
            }
            let report = run_experiment(&dir, &config).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            if !report.skipped.is_empty() {
                eprintln!("warning: skipped {} unreadable file(s)", report.skipped.len());
            }
            match format {
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Json => println!("{}", report.to_json()),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}
