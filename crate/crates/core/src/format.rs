//! Line-oriented text formats.
//!
//! Feedback-set graphs:
//!
//! ```text
//! vertex <name> <weight>     # decimal >= 0 or `inf`
//! edge <u> <v>               # repeatable; `edge x x` is a self-loop
//! ```
//!
//! Networks:
//!
//! ```text
//! node <name> <domain_size>  # integer >= 1
//! edge <parent> <child>
//! ```
//!
//! `#` starts a comment. Errors carry 1-based line numbers.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{DirectedNetwork, NetworkBuilder, NetworkError, VertexId, Weight, WeightedMultigraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, as `(line_number, tokens)`.
fn directives(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn arity(line: usize, tokens: &[&str], expected: usize) -> Result<(), ParseError> {
    if tokens.len() != expected {
        return Err(err(
            line,
            format!("`{}` takes {} arguments, got {}", tokens[0], expected - 1, tokens.len() - 1),
        ));
    }
    Ok(())
}

fn parse_weight(line: usize, token: &str) -> Result<Weight, ParseError> {
    if token == "inf" {
        return Ok(Weight::Infinite);
    }
    let value: f64 = token
        .parse()
        .map_err(|_| err(line, format!("invalid weight `{token}`")))?;
    Weight::new(value).map_err(|e| err(line, e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<WeightedMultigraph, ParseError> {
    let mut g = WeightedMultigraph::new();
    let mut names: HashMap<String, VertexId> = HashMap::new();
    for (line, tokens) in directives(text) {
        match tokens[0] {
            "vertex" => {
                arity(line, &tokens, 3)?;
                if names.contains_key(tokens[1]) {
                    return Err(err(line, format!("duplicate vertex `{}`", tokens[1])));
                }
                let w = parse_weight(line, tokens[2])?;
                names.insert(tokens[1].to_string(), g.add_vertex(tokens[1], w));
            }
            "edge" => {
                arity(line, &tokens, 3)?;
                let lookup = |name: &str| {
                    names
                        .get(name)
                        .copied()
                        .ok_or_else(|| err(line, format!("undeclared vertex `{name}`")))
                };
                let (u, v) = (lookup(tokens[1])?, lookup(tokens[2])?);
                g.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    Ok(g)
}

pub fn parse_network(text: &str) -> Result<DirectedNetwork, ParseError> {
    let mut b = NetworkBuilder::new();
    let mut edge_lines = Vec::new();
    for (line, tokens) in directives(text) {
        match tokens[0] {
            "node" => {
                arity(line, &tokens, 3)?;
                let domain: u64 = tokens[2]
                    .parse()
                    .map_err(|_| err(line, format!("invalid domain size `{}`", tokens[2])))?;
                b.add_node(tokens[1], domain).map_err(|e| err(line, e.to_string()))?;
            }
            "edge" => {
                arity(line, &tokens, 3)?;
                b.add_edge_by_name(tokens[1], tokens[2])
                    .map_err(|e| err(line, e.to_string()))?;
                edge_lines.push(line);
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    let replay = b.clone();
    b.build().map_err(|e| match e {
        NetworkError::Cycle(_) => {
            let (line, name) = first_cycle_edge(&replay, &edge_lines);
            err(line, format!("edge closes a directed cycle through `{name}`"))
        }
        other => err(0, other.to_string()),
    })
}

/// Finds the first edge, in file order, that closes a directed cycle.
fn first_cycle_edge(b: &NetworkBuilder, edge_lines: &[usize]) -> (usize, String) {
    let (nodes, edges) = b.parts();
    let mut partial = NetworkBuilder::new();
    for (name, domain) in &nodes {
        partial.add_node(name.clone(), *domain).expect("names were unique");
    }
    for (k, &(p, c)) in edges.iter().enumerate() {
        partial.add_edge(p, c).expect("edges were valid");
        if partial.clone().build().is_err() {
            return (edge_lines[k], nodes[c.0].0.clone());
        }
    }
    unreachable!("a cycle was reported")
}

/// Serializes a graph, including only live vertices and edges.
pub fn write_graph(g: &WeightedMultigraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "vertex {} {}", g.name(v), g.weight(v)).expect("writing to a String");
    }
    for (_, u, v) in g.edges() {
        writeln!(out, "edge {} {}", g.name(u), g.name(v)).expect("writing to a String");
    }
    out
}

pub fn write_network(d: &DirectedNetwork) -> String {
    let mut out = String::new();
    for v in d.nodes() {
        writeln!(out, "node {} {}", d.name(v), d.domain_size(v)).expect("writing to a String");
    }
    for &(p, c) in d.edges() {
        writeln!(out, "edge {} {}", d.name(p), d.name(c)).expect("writing to a String");
    }
    out
}
