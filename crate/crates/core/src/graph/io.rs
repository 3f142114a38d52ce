use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, GraphError};

/// On-disk graph formats.
///
/// * `EdgeList`: a header line `n m`, then `m` lines `u v` with 0-based ids.
///   Lines starting with `#` are comments.
/// * `Dimacs`: `c` comment lines, a `p edge N M` header, and `e u v` lines
///   with 1-based ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let a = parse_num(toks.next(), line, "first field")?;
        let b = parse_num(toks.next(), line, "second field")?;
        if toks.next().is_some() {
            return Err(parse_err(line, "expected exactly two fields"));
        }
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                for v in [a, b] {
                    if v >= n {
                        return Err(GraphError::VertexOutOfRange { vertex: v, n });
                    }
                }
                if a == b {
                    return Err(GraphError::SelfLoop(a));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header announces {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(parse_err(line, "expected `p edge N M`")),
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = parse_num(toks.next(), line, "endpoint")?;
                let v = parse_num(toks.next(), line, "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(GraphError::VertexOutOfRange { vertex: w, n });
                    }
                }
                if u == v {
                    return Err(GraphError::SelfLoop(u - 1));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p edge N M` line"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("problem line announces {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Serializes with edges sorted, so that parsing the output reproduces the
/// graph exactly.
pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            writeln!(out, "{} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}
