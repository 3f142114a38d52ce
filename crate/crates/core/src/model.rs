//! Labelings, the defence condition and the regime of the parameter `p`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("labeling has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("p must be a positive integer")]
    ZeroP,
    #[error("vertex {0} is labeled 0; its threshold is undefined")]
    ZeroVertex(Vertex),
    #[error("bad labels file: {0}")]
    Parse(String),
}

/// ⌈a/b⌉ for `b > 0`.
pub fn ceil_div(a: u64, b: u64) -> u64 {
    debug_assert!(b > 0);
    a.div_ceil(b)
}

/// Largest admissible label, ⌈Δ/p⌉ + 1.
pub fn max_label(max_degree: usize, p: u64) -> u64 {
    ceil_div(max_degree as u64, p) + 1
}

/// A vertex labeling `f: V -> {0, 1, 2, ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelFunction(Vec<u64>);

impl LabelFunction {
    pub fn new(labels: Vec<u64>) -> Self {
        LabelFunction(labels)
    }

    pub fn all_ones(n: usize) -> Self {
        LabelFunction(vec![1; n])
    }

    pub fn labels(&self) -> &[u64] {
        &self.0
    }

    pub fn into_labels(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u64 {
        self.0[v]
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    /// B0 = {v : f(v) = 0}.
    pub fn zeros(&self) -> Vec<Vertex> {
        self.class(|l| l == 0)
    }

    /// B1 = {v : f(v) = 1}.
    pub fn ones(&self) -> Vec<Vertex> {
        self.class(|l| l == 1)
    }

    /// B2 = {v : f(v) >= 2}.
    pub fn strong(&self) -> Vec<Vertex> {
        self.class(|l| l >= 2)
    }

    fn class(&self, pred: impl Fn(u64) -> bool) -> Vec<Vertex> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(v, &l)| pred(l).then_some(v))
            .collect()
    }

    /// Parses `n` whitespace-separated nonnegative integers.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        text.split_whitespace()
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| ModelError::Parse(format!("`{tok}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(LabelFunction)
    }

    pub fn to_text(&self) -> String {
        let mut s = self.0.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        s.push('\n');
        s
    }
}

/// t(v) = 1 + ⌈|N(v) ∩ B0| / p⌉: the least label that lets `v` defend its
/// zero neighbours.
pub fn threshold(g: &Graph, zero: &[bool], v: Vertex, p: u64) -> Result<u64, ModelError> {
    if p == 0 {
        return Err(ModelError::ZeroP);
    }
    if zero[v] {
        return Err(ModelError::ZeroVertex(v));
    }
    let zeros = g.neighbors(v).iter().filter(|&&w| zero[w]).count() as u64;
    Ok(1 + ceil_div(zeros, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A zero vertex with no neighbour labeled at or above its threshold.
    UndefendedZero,
    /// A label above ⌈Δ/p⌉ + 1.
    LabelExceedsMax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub reason: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub weight: u64,
    pub violations: Vec<Violation>,
    pub max_label: u64,
}

/// Checks `f` against the p-strong Roman defence condition and the codomain
/// bound. The weight is reported whether or not `f` is valid.
pub fn validate(g: &Graph, p: u64, f: &LabelFunction) -> Result<ValidationReport, ModelError> {
    if p == 0 {
        return Err(ModelError::ZeroP);
    }
    if f.len() != g.n() {
        return Err(ModelError::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    let cap = max_label(g.max_degree(), p);
    let zero: Vec<bool> = f.labels().iter().map(|&l| l == 0).collect();
    // adequate[v]: v is nonzero and f(v) >= t(v)
    let adequate: Vec<bool> = (0..g.n())
        .map(|v| !zero[v] && f.get(v) >= threshold(g, &zero, v, p).expect("nonzero vertex"))
        .collect();
    let mut violations = Vec::new();
    for (v, &is_zero) in zero.iter().enumerate() {
        if f.get(v) > cap {
            violations.push(Violation {
                vertex: v,
                reason: ViolationKind::LabelExceedsMax,
            });
        }
        if is_zero && !g.neighbors(v).iter().any(|&w| adequate[w]) {
            violations.push(Violation {
                vertex: v,
                reason: ViolationKind::UndefendedZero,
            });
        }
    }
    Ok(ValidationReport {
        valid: violations.is_empty(),
        weight: f.weight(),
        violations,
        max_label: cap,
    })
}

/// Which classical model the p-strong condition reduces to for a given
/// maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelClass {
    /// p = 1: the all-ones labeling is optimal.
    Trivial,
    /// p = 2: strong Roman domination.
    StrongRoman,
    /// 3 <= p <= Δ - 1.
    PStrong,
    /// p >= Δ: labels collapse to {0, 1, 2}, i.e. Roman domination.
    Roman,
}

pub fn classify_p(max_degree: usize, p: u64) -> ModelClass {
    match p {
        0 | 1 => ModelClass::Trivial,
        2 => ModelClass::StrongRoman,
        p if p >= max_degree as u64 => ModelClass::Roman,
        _ => ModelClass::PStrong,
    }
}
