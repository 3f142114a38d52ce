//! Closed-form bounds on γ_StR^p with explicit applicability verdicts.
//!
//! Every structural bound is stated for graphs with Δ ≥ 4 and 3 ≤ p ≤ Δ − 1;
//! outside that range the report still lists it, marked inapplicable.

use std::fmt;

use serde::Serialize;

use crate::graph::{girth, is_connected, Graph};
use crate::model::ceil_div;
use crate::solver::{domination_number, roman_domination_number, solve_exact, SolverConfig, SolverError};

/// Why a bound does not apply to a given graph and p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inapplicable(pub String);

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Inapplicable {}

/// n − Δ + ⌈Δ/p⌉: a maximum-degree vertex defends its whole neighbourhood.
pub fn bound_up1(n: usize, max_degree: usize, p: u64) -> u64 {
    n as u64 - max_degree as u64 + ceil_div(max_degree as u64, p)
}

pub fn bound_nminus2(n: usize) -> u64 {
    (n as u64).saturating_sub(2)
}

/// n − r² + (⌈(r−1)/p⌉ + 1)·r for r-regular graphs with r ≥ p + 1 and
/// girth at least 5.
pub fn bound_regular(g: &Graph, p: u64) -> Result<u64, Inapplicable> {
    let r = g.max_degree();
    if g.n() == 0 || g.min_degree() != r {
        return Err(Inapplicable("graph is not regular".into()));
    }
    if (r as u64) < p + 1 {
        return Err(Inapplicable(format!("degree {r} is below p + 1 = {}", p + 1)));
    }
    let gi = girth(g);
    if !gi.at_least(5) {
        return Err(Inapplicable(format!("girth {gi} is below 5")));
    }
    let r = r as u64;
    Ok(g.n() as u64 + (ceil_div(r - 1, p) + 1) * r - r * r)
}

/// ⌈(n + p − 1)/p⌉.
pub fn bound_lowbound(n: usize, p: u64) -> u64 {
    ceil_div(n as u64 + p - 1, p)
}

/// n + ⌈(1 − p)·b0/p⌉ = n − ⌊(p − 1)·b0/p⌋, for b0 the number of zeros of a
/// minimum-weight labeling.
pub fn lemma_low_b0(n: usize, p: u64, b0: usize) -> u64 {
    n as u64 - (p - 1) * b0 as u64 / p
}

/// ⌈p·(n − γ)/(p − 1)⌉, the least number of zeros a minimum labeling can
/// have. `None` for p < 2.
pub fn corollary_b0_min(n: usize, p: u64, gamma: u64) -> Option<u64> {
    if p < 2 {
        return None;
    }
    let slack = (n as u64).saturating_sub(gamma);
    Some(ceil_div(p * slack, p - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Probabilistic {
    pub value: f64,
    /// Inclusion probability that minimizes the expected weight.
    pub xi: f64,
}

/// (1 + ⌈Δ/p⌉)·n/(1 + δ) · (ln((1 + δ)/(1 + ⌈Δ/p⌉)) + 1), valid when
/// ⌈Δ/p⌉ < δ.
pub fn bound_probabilistic(g: &Graph, p: u64) -> Result<Probabilistic, Inapplicable> {
    let c = ceil_div(g.max_degree() as u64, p);
    let delta = g.min_degree() as u64;
    if g.n() == 0 || c >= delta {
        return Err(Inapplicable(format!("⌈Δ/p⌉ = {c} is not below δ = {delta}")));
    }
    let a = (1 + c) as f64;
    let b = (1 + delta) as f64;
    let ln = (b / a).ln();
    Ok(Probabilistic {
        value: a * g.n() as f64 / b * (ln + 1.0),
        xi: ln / b,
    })
}

/// γ_R ≤ γ_StR^p ≤ (⌈Δ/p⌉ + 1)·γ, given exact γ and γ_R.
pub fn sandwich(g: &Graph, p: u64, gamma: u64, gamma_r: u64) -> (u64, u64) {
    (gamma_r, (ceil_div(g.max_degree() as u64, p) + 1) * gamma)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Lower,
    Upper,
}

/// Whether an entry is a closed form in graph invariants or needs exact
/// solver output (γ, γ_R or an optimal labeling).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Structural,
    SolverAssisted,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BoundValue {
    Integer(u64),
    Real(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub direction: Direction,
    /// Absent when the formula is undefined for this graph.
    pub value: Option<BoundValue>,
    pub applicable: bool,
    pub reason: String,
    /// The formula, spelled out.
    pub anchor: &'static str,
    pub source: Source,
}

impl BoundEntry {
    /// The integer the entry certifies: reals are rounded inward (floor for
    /// upper bounds, ceiling for lower bounds).
    pub fn integer_value(&self) -> Option<u64> {
        match self.value? {
            BoundValue::Integer(v) => Some(v),
            BoundValue::Real(x) => Some(match self.direction {
                Direction::Upper => x.floor() as u64,
                Direction::Lower => x.ceil() as u64,
            }),
        }
    }

    /// True when the entry is inapplicable or is consistent with `exact`.
    pub fn brackets(&self, exact: u64) -> bool {
        match (self.applicable, self.integer_value()) {
            (true, Some(v)) => match self.direction {
                Direction::Lower => v <= exact,
                Direction::Upper => v >= exact,
            },
            _ => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub p: u64,
    pub entries: Vec<BoundEntry>,
    /// Best applicable structural lower bound.
    pub best_lower: Option<u64>,
    /// Best applicable structural upper bound.
    pub best_upper: Option<u64>,
}

fn standard_range(g: &Graph, p: u64) -> Result<(), Inapplicable> {
    let d = g.max_degree() as u64;
    if d < 4 {
        return Err(Inapplicable(format!("Δ = {d} is below 4")));
    }
    if p < 3 || p + 1 > d {
        return Err(Inapplicable(format!("p = {p} is outside 3..=Δ-1 = 3..={}", d - 1)));
    }
    Ok(())
}

fn connected_range(g: &Graph, p: u64) -> Result<(), Inapplicable> {
    standard_range(g, p)?;
    if !is_connected(g) {
        return Err(Inapplicable("graph is disconnected".into()));
    }
    Ok(())
}

fn entry(
    name: &'static str,
    direction: Direction,
    anchor: &'static str,
    source: Source,
    verdict: Result<(), Inapplicable>,
    value: Option<BoundValue>,
) -> BoundEntry {
    let (applicable, reason) = match verdict {
        Ok(()) => (value.is_some(), "hypotheses hold".to_string()),
        Err(e) => (false, e.0),
    };
    BoundEntry {
        name,
        direction,
        value,
        applicable,
        reason,
        anchor,
        source,
    }
}

/// Evaluates every bound on `g`. With `with_solver`, also computes γ, γ_R
/// and an optimal labeling and adds the entries that depend on them.
pub fn bounds_report(g: &Graph, p: u64, with_solver: bool) -> Result<BoundsReport, SolverError> {
    if p == 0 {
        return Err(SolverError::ZeroP);
    }
    use Direction::*;
    use Source::*;
    let n = g.n();
    let d = g.max_degree();
    let int = |v: u64| Some(BoundValue::Integer(v));
    let mut entries = vec![
        entry(
            "up1",
            Upper,
            "n - Δ + ⌈Δ/p⌉",
            Structural,
            standard_range(g, p),
            (d <= n && n > 0).then(|| BoundValue::Integer(bound_up1(n, d, p))),
        ),
        entry(
            "n_minus_2",
            Upper,
            "n - 2",
            Structural,
            standard_range(g, p),
            int(bound_nminus2(n)),
        ),
    ];
    let regular = bound_regular(g, p);
    entries.push(entry(
        "regular",
        Upper,
        "n - r² + (⌈(r-1)/p⌉ + 1)·r",
        Structural,
        standard_range(g, p).and(regular.clone().map(|_| ())),
        regular.ok().map(BoundValue::Integer),
    ));
    let prob = bound_probabilistic(g, p);
    entries.push(entry(
        "probabilistic",
        Upper,
        "(1 + ⌈Δ/p⌉)·n/(1 + δ)·(ln((1 + δ)/(1 + ⌈Δ/p⌉)) + 1)",
        Structural,
        standard_range(g, p).and(prob.clone().map(|_| ())),
        prob.ok().map(|b| BoundValue::Real(b.value)),
    ));
    entries.push(entry(
        "lowbound",
        Lower,
        "⌈(n + p - 1)/p⌉",
        Structural,
        connected_range(g, p),
        (n > 0).then(|| BoundValue::Integer(bound_lowbound(n, p))),
    ));

    if with_solver {
        let cfg = SolverConfig::default();
        let gamma = domination_number(g)?.value;
        let gamma_r = roman_domination_number(g, &cfg)?.value;
        let (lo, hi) = sandwich(g, p, gamma, gamma_r);
        entries.push(entry(
            "sandwich_lower",
            Lower,
            "γ_R",
            SolverAssisted,
            connected_range(g, p),
            int(lo),
        ));
        entries.push(entry(
            "sandwich_upper",
            Upper,
            "(⌈Δ/p⌉ + 1)·γ",
            SolverAssisted,
            connected_range(g, p),
            int(hi),
        ));
        let opt = solve_exact(g, p, &cfg)?;
        let b0 = opt.witness.zeros().len();
        entries.push(entry(
            "low_b0",
            Lower,
            "n - ⌊(p - 1)·|B0|/p⌋ with B0 from an optimal labeling",
            SolverAssisted,
            standard_range(g, p),
            int(lemma_low_b0(n, p, b0)),
        ));
    }

    let best = |dir: Direction| {
        let vals = entries
            .iter()
            .filter(|e| e.applicable && e.direction == dir && e.source == Structural)
            .filter_map(BoundEntry::integer_value);
        match dir {
            Lower => vals.max(),
            Upper => vals.min(),
        }
    };
    Ok(BoundsReport {
        p,
        best_lower: best(Lower),
        best_upper: best(Upper),
        entries,
    })
}
