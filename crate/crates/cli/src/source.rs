//! Resolving `--graph` arguments: built-in names, `family:params` shorthands
//! or a path to an edge-list / DIMACS file.

use std::fs;
use std::path::Path;

use pstrd::graph::{generate, parse_graph, FamilySpec, Graph, GraphFormat};

pub const GRAPH_HELP: &str = "\
Graph to load. Either a file (edge list, or DIMACS for .col/.dimacs files
unless --format says otherwise) or a built-in:
  robertson, fig3_spider,
  path:N, cycle:N, star:N (N vertices), kbip:R,S, bistar:R,S,
  edgeless:N, gnm:N,M,SEED, universal:N (K_1 joined with N-1 isolated vertices)";

fn numbers(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|w| w.trim().parse().map_err(|_| format!("bad number {w:?}")))
        .collect()
}

/// Built-in graph for a keyword, `None` if `arg` is not one.
pub fn builtin(arg: &str) -> Option<Result<FamilySpec, String>> {
    match arg {
        "robertson" => return Some(Ok(FamilySpec::Robertson)),
        "fig3_spider" | "fig3" => return Some(Ok(FamilySpec::Fig3Spider)),
        _ => {}
    }
    let (name, params) = arg.split_once(':')?;
    let spec = numbers(params).and_then(|v| {
        let want = |k: usize| {
            if v.len() == k {
                Ok(())
            } else {
                Err(format!("{name} takes {k} parameter(s), got {}", v.len()))
            }
        };
        Ok(match name {
            "path" => want(1).map(|_| FamilySpec::Path(v[0]))?,
            "cycle" => want(1).map(|_| FamilySpec::Cycle(v[0]))?,
            "star" => want(1).map(|_| FamilySpec::Star(v[0]))?,
            "edgeless" => want(1).map(|_| FamilySpec::Edgeless(v[0]))?,
            "kbip" => want(2).map(|_| FamilySpec::CompleteBipartite(v[0], v[1]))?,
            "bistar" => want(2).map(|_| FamilySpec::DoubleStar(v[0], v[1]))?,
            "gnm" => want(3).map(|_| FamilySpec::RandomGnm {
                n: v[0],
                m: v[1],
                seed: v[2] as u64,
            })?,
            "universal" => want(1).map(|_| {
                FamilySpec::Join(
                    Box::new(FamilySpec::Edgeless(1)),
                    Box::new(FamilySpec::Edgeless(v[0].saturating_sub(1))),
                )
            })?,
            _ => return Err(format!("unknown graph family {name:?}")),
        })
    });
    Some(spec)
}

pub fn load_graph(arg: &str, format: Option<GraphFormat>) -> Result<Graph, String> {
    if let Some(spec) = builtin(arg) {
        return generate(&spec?).map_err(|e| e.to_string());
    }
    let path = Path::new(arg);
    let text = fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
    let format = format.unwrap_or_else(|| guess_format(path));
    parse_graph(&text, format).map_err(|e| format!("{arg}: {e}"))
}

pub fn guess_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("col" | "dimacs") => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}
