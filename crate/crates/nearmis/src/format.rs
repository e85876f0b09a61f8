//! DIMACS and edge-list graph files.
//!
//! DIMACS: `c` comment lines, one `p edge N M` header (`p col` is accepted
//! too), then `e u v` lines with 1-based vertex ids.
//!
//! Edge list: one `u v` pair per line with arbitrary non-negative integer
//! ids; a line holding a single id declares a vertex without edges. Blank
//! lines and everything after `#` are ignored. Ids are relabeled densely in
//! ascending order.
//!
//! In both formats duplicate edges collapse and self-loops are rejected.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use nearmis_core::graph::GraphBuilder;
use nearmis_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown graph format `{0}` (expected dimacs or edgelist)")]
    UnknownFormat(String),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Edgelist,
}

impl GraphFormat {
    /// `.col`, `.dimacs`, `.clq` and `.dim` are DIMACS, anything else is an
    /// edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs" | "clq" | "dim") => GraphFormat::Dimacs,
            _ => GraphFormat::Edgelist,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::Dimacs => "dimacs",
            GraphFormat::Edgelist => "edgelist",
        }
    }
}

impl FromStr for GraphFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edgelist" | "el" => Ok(GraphFormat::Edgelist),
            other => Err(FormatError::UnknownFormat(other.to_string())),
        }
    }
}

/// A graph with the external id of every dense vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

impl LabeledGraph {
    /// Labels `0..n`.
    pub fn identity(graph: Graph) -> Self {
        let labels = (0..graph.n() as u64).collect();
        LabeledGraph { graph, labels }
    }

    pub fn external(&self, ids: &[usize]) -> Vec<u64> {
        ids.iter().map(|&v| self.labels[v]).collect()
    }
}

pub fn parse_graph(path: &Path, format: GraphFormat) -> Result<LabeledGraph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_str(&text, format)
}

pub fn parse_str(text: &str, format: GraphFormat) -> Result<LabeledGraph, FormatError> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::Edgelist => parse_edgelist(text),
    }
}

fn parse_dimacs(text: &str) -> Result<LabeledGraph, FormatError> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if builder.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                match tok.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(parse_err(
                            line,
                            format!("expected `p edge N M`, found format {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                let n = number(tok.next(), line, "vertex count")?;
                let _m = number(tok.next(), line, "edge count")?;
                if tok.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after `p edge N M`"));
                }
                builder = Some(GraphBuilder::new(n as usize));
            }
            Some("e") => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge line before the `p edge` header"))?;
                let u = number(tok.next(), line, "edge endpoint")?;
                let v = number(tok.next(), line, "edge endpoint")?;
                if tok.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after `e u v`"));
                }
                let n = b.n() as u64;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                b.add_edge(u as usize - 1, v as usize - 1)
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            Some(other) => {
                return Err(parse_err(line, format!("unknown line type `{other}`")));
            }
        }
    }
    let b = builder.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `p edge N M` header"))?;
    let graph = b.build();
    let labels = (1..=graph.n() as u64).collect();
    Ok(LabeledGraph { graph, labels })
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<u64, FormatError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse::<u64>()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn parse_edgelist(text: &str) -> Result<LabeledGraph, FormatError> {
    let mut ids = BTreeSet::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [v] => {
                ids.insert(number(Some(v), line, "vertex id")?);
            }
            [u, v] => {
                let u = number(Some(u), line, "vertex id")?;
                let v = number(Some(v), line, "vertex id")?;
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                ids.insert(u);
                ids.insert(v);
                edges.push((u, v));
            }
            _ => return Err(parse_err(line, "expected `u v` or a single vertex id")),
        }
    }
    let labels: Vec<u64> = ids.into_iter().collect();
    let dense = |x: u64| labels.binary_search(&x).expect("collected id");
    let mut b = GraphBuilder::new(labels.len());
    for (u, v) in edges {
        b.add_edge(dense(u), dense(v)).expect("validated edge");
    }
    Ok(LabeledGraph {
        graph: b.build(),
        labels,
    })
}

/// Serializes `g` with its labels. DIMACS output always uses `1..=n`.
pub fn write_graph(g: &LabeledGraph, format: GraphFormat) -> String {
    let mut out = String::new();
    let graph = &g.graph;
    match format {
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", graph.n(), graph.m()).unwrap();
            for (u, v) in graph.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        GraphFormat::Edgelist => {
            writeln!(out, "# n = {}, m = {}", graph.n(), graph.m()).unwrap();
            for (u, v) in graph.edges() {
                writeln!(out, "{} {}", g.labels[u], g.labels[v]).unwrap();
            }
            for v in (0..graph.n()).filter(|&v| graph.neighbors(v).next().is_none()) {
                writeln!(out, "{}", g.labels[v]).unwrap();
            }
        }
    }
    out
}

pub fn write_graph_file(path: &Path, g: &LabeledGraph, format: GraphFormat) -> Result<(), FormatError> {
    std::fs::write(path, write_graph(g, format)).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}
