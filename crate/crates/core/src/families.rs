//! Closed forms for complete bipartite graphs, double stars and graphs with
//! a universal vertex, and recognition of graphs with γ_StR^p ∈ {3, 4}.

use serde::Serialize;

use crate::graph::Graph;
use crate::model::ceil_div;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    CompleteBipartite,
    Bistar,
    Universal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyValue {
    pub family: Family,
    pub parameters: Vec<u64>,
    pub p: u64,
    /// `None` whenever `applicable` is false.
    pub value: Option<u64>,
    pub applicable: bool,
    pub reason: String,
}

fn verdict(family: Family, parameters: Vec<u64>, p: u64, check: Result<u64, String>) -> FamilyValue {
    let (value, applicable, reason) = match check {
        Ok(v) => (Some(v), true, "hypotheses hold".to_string()),
        Err(r) => (None, false, r),
    };
    FamilyValue {
        family,
        parameters,
        p,
        value,
        applicable,
        reason,
    }
}

fn p_range(p: u64, max_degree: u64) -> Result<(), String> {
    if max_degree < 4 {
        return Err(format!("Δ = {max_degree} is below 4"));
    }
    if p < 3 || p + 1 > max_degree {
        return Err(format!("p = {p} is outside 3..={}", max_degree - 1));
    }
    Ok(())
}

/// K_{r,s} with 2 ≤ r ≤ s, s ≥ 4 and 3 ≤ p ≤ s − 1: 2 + ⌈s/p⌉ for r = 2,
/// ⌈(r+p−1)/p⌉ + ⌈(s+p−1)/p⌉ for r ≥ 3.
pub fn value_complete_bipartite(r: u64, s: u64, p: u64) -> FamilyValue {
    let check = (|| {
        if r < 2 || r > s {
            return Err(format!("need 2 <= r <= s, got r = {r}, s = {s}"));
        }
        p_range(p, s)?;
        Ok(if r == 2 {
            2 + ceil_div(s, p)
        } else {
            ceil_div(r + p - 1, p) + ceil_div(s + p - 1, p)
        })
    })();
    verdict(Family::CompleteBipartite, vec![r, s], p, check)
}

/// T_{r,s} with 1 ≤ r ≤ s, Δ = s + 1 ≥ 4 and 3 ≤ p ≤ s: 2 + ⌈r/p⌉ + ⌈s/p⌉.
pub fn value_bistar(r: u64, s: u64, p: u64) -> FamilyValue {
    let check = (|| {
        if r < 1 || r > s {
            return Err(format!("need 1 <= r <= s, got r = {r}, s = {s}"));
        }
        p_range(p, s + 1)?;
        Ok(2 + ceil_div(r, p) + ceil_div(s, p))
    })();
    verdict(Family::Bistar, vec![r, s], p, check)
}

/// Order-n graphs with a universal vertex, 3 ≤ p ≤ n − 2: ⌈(n+p−1)/p⌉.
pub fn value_universal(n: u64, p: u64) -> FamilyValue {
    let check = (|| {
        if n < 1 {
            return Err("need n >= 1".to_string());
        }
        p_range(p, n - 1)?;
        let a = ceil_div(n + p - 1, p);
        let b = n - (p - 1) * (n - 1) / p;
        assert_eq!(a, b, "the two closed forms disagree for n = {n}, p = {p}");
        Ok(a)
    })();
    verdict(Family::Universal, vec![n], p, check)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallValue {
    Three,
    /// Which of the three structural conditions matched.
    Four(u8),
    Other,
}

/// Structural test for γ_StR^p ∈ {3, 4}. `None` unless Δ ≥ 4 and
/// 3 ≤ p ≤ Δ − 1.
///
/// `Three` is exact. `Four` is sound, but some graphs of value 4 (double
/// stars T_{p,p}, for instance) match none of the conditions and come back
/// as `Other`.
pub fn classify_small_value(g: &Graph, p: u64) -> Option<SmallValue> {
    let n = g.n() as u64;
    let d = g.max_degree() as u64;
    p_range(p, d).ok()?;
    if d == n - 1 {
        return Some(if (p + 2..=2 * p + 1).contains(&n) {
            SmallValue::Three
        } else if (2 * p + 2..=3 * p + 1).contains(&n) {
            SmallValue::Four(1)
        } else {
            SmallValue::Other
        });
    }
    if d == n - 2 {
        if (4..=2 * p + 2).contains(&n) && two_hubs(g) {
            return Some(SmallValue::Four(2));
        }
        if (p + 3..=2 * p + 2).contains(&n) {
            return Some(SmallValue::Four(3));
        }
    }
    Some(SmallValue::Other)
}

/// Two distinct vertices, each adjacent to every vertex but the other.
fn two_hubs(g: &Graph) -> bool {
    let n = g.n();
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 2 == n).collect();
    hubs.iter().enumerate().any(|(i, &u)| {
        hubs[i + 1..]
            .iter()
            .any(|&v| !g.has_edge(u, v) && (0..n).all(|w| w == u || w == v || (g.has_edge(u, w) && g.has_edge(v, w))))
    })
}
