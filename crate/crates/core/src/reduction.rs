//! Exact cover by 3-sets (X3C) and its reduction to p-strong Roman
//! domination.
//!
//! Vertex layout of a reduction graph: the element vertices x_1..x_{3q} take
//! ids `0..3q`, then each clause j contributes the block
//! `clause(j), z(j), h(j,1), ..., h(j,2p-1)` in clause order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::model::{validate, LabelFunction};
use crate::solver::{solve_exact, SolverConfig, SolverError};

/// Largest reduction graph handed to the exact solver by the verifier.
pub const VERIFY_MAX_N: usize = 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("clause {clause} repeats element {element}")]
    DuplicateElement { clause: usize, element: usize },
    #[error("clause {clause}: element {element} is outside 1..={max}")]
    ElementOutOfRange { clause: usize, element: usize, max: usize },
    #[error("an instance needs q >= 1 and at least one clause")]
    Empty,
    #[error("p must be at least 3, got {0}")]
    PTooSmall(u64),
    #[error("not an exact cover: {0}")]
    InvalidCover(String),
    #[error("reduction graph has {n} vertices; verification handles at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Elements are `1..=3q`; clauses are referred to by 0-based index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct X3CInstance {
    q: usize,
    clauses: Vec<[usize; 3]>,
}

impl X3CInstance {
    pub fn new(q: usize, clauses: Vec<[usize; 3]>) -> Result<Self, ReductionError> {
        if q == 0 || clauses.is_empty() {
            return Err(ReductionError::Empty);
        }
        for (j, c) in clauses.iter().enumerate() {
            for (a, &e) in c.iter().enumerate() {
                if e == 0 || e > 3 * q {
                    return Err(ReductionError::ElementOutOfRange {
                        clause: j,
                        element: e,
                        max: 3 * q,
                    });
                }
                if c[..a].contains(&e) {
                    return Err(ReductionError::DuplicateElement { clause: j, element: e });
                }
            }
        }
        Ok(X3CInstance { q, clauses })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn t(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// True when `cover` lists q clauses that partition the elements.
    pub fn check_cover(&self, cover: &[usize]) -> Result<(), ReductionError> {
        let bad = |m: String| Err(ReductionError::InvalidCover(m));
        if cover.len() != self.q {
            return bad(format!("{} clauses given, {} needed", cover.len(), self.q));
        }
        let mut seen = vec![false; 3 * self.q + 1];
        for &j in cover {
            let Some(c) = self.clauses.get(j) else {
                return bad(format!("no clause {j}"));
            };
            for &e in c {
                if std::mem::replace(&mut seen[e], true) {
                    return bad(format!("element {e} covered twice"));
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.q, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {}\n", c[0], c[1], c[2]));
        }
        s
    }
}

/// Header `q t`, then t lines of three elements. `#` starts a comment.
pub fn parse_x3c(text: &str) -> Result<X3CInstance, ReductionError> {
    let mut rows = text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap().trim();
        (!l.is_empty()).then_some((i + 1, l))
    });
    let ints = |line: usize, l: &str| -> Result<Vec<usize>, ReductionError> {
        l.split_whitespace()
            .map(|w| {
                w.parse().map_err(|_| ReductionError::Parse {
                    line,
                    message: format!("expected a non-negative integer, found {w:?}"),
                })
            })
            .collect()
    };
    let (hl, header) = rows.next().ok_or(ReductionError::Parse {
        line: 1,
        message: "missing header `q t`".into(),
    })?;
    let [q, t] = ints(hl, header)?[..] else {
        return Err(ReductionError::Parse {
            line: hl,
            message: "header must be `q t`".into(),
        });
    };
    let mut clauses = Vec::with_capacity(t);
    for (line, l) in rows {
        let [a, b, c] = ints(line, l)?[..] else {
            return Err(ReductionError::Parse {
                line,
                message: "a clause has exactly three elements".into(),
            });
        };
        clauses.push([a, b, c]);
    }
    if clauses.len() != t {
        return Err(ReductionError::Parse {
            line: hl,
            message: format!("header announces {t} clauses, found {}", clauses.len()),
        });
    }
    X3CInstance::new(q, clauses)
}

/// Backtracking on the lowest uncovered element, trying its clauses in
/// index order. Returns the first cover found, as sorted clause indices.
pub fn x3c_has_exact_cover(inst: &X3CInstance) -> Option<Vec<usize>> {
    let n = 3 * inst.q;
    let mut by_element: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (j, c) in inst.clauses.iter().enumerate() {
        for &e in c {
            by_element[e].push(j);
        }
    }
    fn go(inst: &X3CInstance, by_element: &[Vec<usize>], used: &mut [bool], chosen: &mut Vec<usize>) -> bool {
        let Some(e) = (1..used.len()).find(|&e| !used[e]) else {
            return true;
        };
        for &j in &by_element[e] {
            let c = inst.clauses[j];
            if c.iter().any(|&x| used[x]) {
                continue;
            }
            c.iter().for_each(|&x| used[x] = true);
            chosen.push(j);
            if go(inst, by_element, used, chosen) {
                return true;
            }
            chosen.pop();
            c.iter().for_each(|&x| used[x] = false);
        }
        false
    }
    let mut used = vec![false; n + 1];
    let mut chosen = Vec::new();
    go(inst, &by_element, &mut used, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Bipartite,
    /// The bipartite graph plus a clique on the clause vertices.
    Chordal,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bipartite" => Ok(Variant::Bipartite),
            "chordal" => Ok(Variant::Chordal),
            _ => Err(format!("unknown variant {s:?} (expected bipartite or chordal)")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Bipartite => "bipartite",
            Variant::Chordal => "chordal",
        })
    }
}

/// What a vertex of the reduction graph stands for. Elements are 1-based,
/// clauses 0-based, h-leaves numbered `1..=2p-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    X(usize),
    Clause(usize),
    Z(usize),
    H(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionResult {
    pub instance: X3CInstance,
    pub p: u64,
    pub variant: Variant,
    #[serde(skip)]
    pub graph: Graph,
    pub roles: Vec<Role>,
    /// 2q + 3t.
    pub r_threshold: u64,
}

impl ReductionResult {
    pub fn clause_vertex(&self, j: usize) -> Vertex {
        3 * self.instance.q + j * self.block()
    }

    pub fn z_vertex(&self, j: usize) -> Vertex {
        self.clause_vertex(j) + 1
    }

    fn block(&self) -> usize {
        2 * self.p as usize + 1
    }
}

pub fn build_reduction(inst: &X3CInstance, p: u64, variant: Variant) -> Result<ReductionResult, ReductionError> {
    if p < 3 {
        return Err(ReductionError::PTooSmall(p));
    }
    let (q, t) = (inst.q, inst.t());
    let leaves = 2 * p as usize - 1;
    let block = leaves + 2;
    let n = 3 * q + t * block;
    let mut roles: Vec<Role> = (1..=3 * q).map(Role::X).collect();
    let mut edges = Vec::new();
    for (j, c) in inst.clauses.iter().enumerate() {
        let cj = roles.len();
        let zj = cj + 1;
        roles.push(Role::Clause(j));
        roles.push(Role::Z(j));
        edges.extend(c.iter().map(|&e| (e - 1, cj)));
        edges.push((cj, zj));
        for l in 1..=leaves {
            edges.push((zj, roles.len()));
            roles.push(Role::H(j, l));
        }
    }
    if variant == Variant::Chordal {
        for j in 0..t {
            for k in j + 1..t {
                edges.push((3 * q + j * block, 3 * q + k * block));
            }
        }
    }
    let graph = Graph::from_edges(n, edges).expect("reduction edges are in range and loop-free");
    Ok(ReductionResult {
        instance: inst.clone(),
        p,
        variant,
        graph,
        roles,
        r_threshold: (2 * q + 3 * t) as u64,
    })
}

/// x, h and non-cover clause vertices get 0, cover clauses 2, every z 3.
/// The result is not checked here; run it through `validate`.
pub fn proof_labeling(res: &ReductionResult, cover: &[usize]) -> Result<LabelFunction, ReductionError> {
    res.instance.check_cover(cover)?;
    let labels = res
        .roles
        .iter()
        .map(|role| match *role {
            Role::X(_) | Role::H(..) => 0,
            Role::Clause(j) => {
                if cover.contains(&j) {
                    2
                } else {
                    0
                }
            }
            Role::Z(_) => 3,
        })
        .collect();
    Ok(LabelFunction::new(labels))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub p: u64,
    pub variant: Variant,
    pub vertices: usize,
    pub cover: Option<Vec<usize>>,
    /// γ_StR^p of the reduction graph.
    pub gamma: u64,
    pub r_threshold: u64,
    /// `cover.is_some() == (gamma <= r_threshold)`.
    pub holds: bool,
    /// Whether the proof labeling of `cover` validates, and its weight.
    pub proof_labeling_valid: Option<bool>,
    pub proof_labeling_weight: Option<u64>,
}

/// Decides both sides of "cover exists ⟺ γ_StR^p ≤ 2q + 3t" on a reduction
/// graph of at most [`VERIFY_MAX_N`] vertices.
pub fn verify_reduction_equivalence(
    inst: &X3CInstance,
    p: u64,
    variant: Variant,
    cfg: &SolverConfig,
) -> Result<EquivalenceReport, ReductionError> {
    let res = build_reduction(inst, p, variant)?;
    let n = res.graph.n();
    if n > VERIFY_MAX_N {
        return Err(ReductionError::TooLarge { n, limit: VERIFY_MAX_N });
    }
    let cover = x3c_has_exact_cover(inst);
    let gamma = solve_exact(&res.graph, p, cfg)?.value;
    let (mut valid, mut weight) = (None, None);
    if let Some(c) = &cover {
        let f = proof_labeling(&res, c)?;
        valid = Some(validate(&res.graph, p, &f).expect("lengths match").valid);
        weight = Some(f.weight());
    }
    Ok(EquivalenceReport {
        p,
        variant,
        vertices: n,
        holds: cover.is_some() == (gamma <= res.r_threshold),
        cover,
        gamma,
        r_threshold: res.r_threshold,
        proof_labeling_valid: valid,
        proof_labeling_weight: weight,
    })
}

/// The five-clause instance over six elements with cover {1, 4}.
pub fn paper_example() -> X3CInstance {
    X3CInstance::new(2, vec![[1, 2, 3], [1, 2, 4], [1, 5, 6], [2, 3, 4], [3, 5, 6]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::metrics;

    #[test]
    fn parse_examples() {
        let text = "# five clauses\n2 5\n1 2 3\n1 2 4\n1 5 6\n2 3 4\n3 5 6\n";
        assert_eq!(parse_x3c(text).unwrap(), paper_example());
        let one = parse_x3c("1 1\n1 2 3").unwrap();
        assert_eq!((one.q(), one.t()), (1, 1));
        assert_eq!(
            parse_x3c("1 1\n1 1 2"),
            Err(ReductionError::DuplicateElement { clause: 0, element: 1 })
        );
        assert!(matches!(
            parse_x3c("1 1\n1 2 4"),
            Err(ReductionError::ElementOutOfRange { element: 4, .. })
        ));
        assert!(matches!(parse_x3c("1 2\n1 2 3"), Err(ReductionError::Parse { .. })));
        assert!(matches!(
            parse_x3c("1 1\n1 2"),
            Err(ReductionError::Parse { line: 2, .. })
        ));
        assert_eq!(parse_x3c(&paper_example().to_text()).unwrap(), paper_example());
    }

    #[test]
    fn covers() {
        assert_eq!(x3c_has_exact_cover(&paper_example()), Some(vec![1, 4]));
        let one = X3CInstance::new(1, vec![[1, 2, 3]]).unwrap();
        assert_eq!(x3c_has_exact_cover(&one), Some(vec![0]));
        let twice = X3CInstance::new(1, vec![[1, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(x3c_has_exact_cover(&twice).map(|c| c.len()), Some(1));
        let blocked = X3CInstance::new(2, vec![[1, 2, 3], [1, 4, 5], [1, 5, 6]]).unwrap();
        assert_eq!(x3c_has_exact_cover(&blocked), None);
    }

    #[test]
    fn cover_checks() {
        let inst = paper_example();
        assert!(inst.check_cover(&[1, 4]).is_ok());
        assert!(inst.check_cover(&[0, 4]).is_err());
        assert!(inst.check_cover(&[1]).is_err());
        assert!(inst.check_cover(&[1, 9]).is_err());
    }

    #[test]
    fn construction_counts_and_shape() {
        let r = build_reduction(&paper_example(), 3, Variant::Bipartite).unwrap();
        assert_eq!((r.graph.n(), r.r_threshold), (41, 19));
        let m = metrics(&r.graph);
        assert!(m.bipartite);
        let c = build_reduction(&paper_example(), 3, Variant::Chordal).unwrap();
        let m = metrics(&c.graph);
        assert!(m.chordal && !m.bipartite);
        let small = build_reduction(&X3CInstance::new(1, vec![[1, 2, 3]]).unwrap(), 3, Variant::Bipartite).unwrap();
        assert_eq!((small.graph.n(), small.r_threshold), (10, 5));
        assert_eq!(
            build_reduction(&paper_example(), 2, Variant::Bipartite).map(|_| ()),
            Err(ReductionError::PTooSmall(2))
        );
    }

    #[test]
    fn gadget_structure() {
        let inst = paper_example();
        for p in [3, 4] {
            let r = build_reduction(&inst, p, Variant::Bipartite).unwrap();
            for (j, clause) in inst.clauses().iter().enumerate() {
                let (c, z) = (r.clause_vertex(j), r.z_vertex(j));
                assert_eq!(r.roles[c], Role::Clause(j));
                assert_eq!(r.roles[z], Role::Z(j));
                assert_eq!(r.graph.degree(z), 2 * p as usize);
                assert!(r.graph.has_edge(c, z));
                for e in 1..=6 {
                    assert_eq!(r.graph.has_edge(e - 1, c), clause.contains(&e));
                }
                for &w in r.graph.neighbors(z) {
                    assert!(w == c || matches!(r.roles[w], Role::H(jj, _) if jj == j));
                }
            }
        }
    }

    #[test]
    fn proof_labeling_weights() {
        let inst = paper_example();
        let r = build_reduction(&inst, 3, Variant::Bipartite).unwrap();
        let f = proof_labeling(&r, &[1, 4]).unwrap();
        let v = validate(&r.graph, 3, &f).unwrap();
        assert!(v.valid);
        assert_eq!(v.weight, 19);
        let one = X3CInstance::new(1, vec![[1, 2, 3]]).unwrap();
        for p in [3, 4] {
            let r = build_reduction(&one, p, Variant::Bipartite).unwrap();
            let v = validate(&r.graph, p, &proof_labeling(&r, &[0]).unwrap()).unwrap();
            assert!(v.valid);
            assert_eq!(v.weight, 5);
        }
        assert!(proof_labeling(&r, &[0, 4]).is_err());
    }

    #[test]
    fn small_equivalence() {
        let one = X3CInstance::new(1, vec![[1, 2, 3]]).unwrap();
        let rep = verify_reduction_equivalence(&one, 3, Variant::Bipartite, &SolverConfig::default()).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.gamma, 5);
        assert_eq!(rep.cover, Some(vec![0]));
        let big = verify_reduction_equivalence(&paper_example(), 3, Variant::Bipartite, &SolverConfig::default());
        assert_eq!(big, Err(ReductionError::TooLarge { n: 41, limit: 18 }));
    }
}
