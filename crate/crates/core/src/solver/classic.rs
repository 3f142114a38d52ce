//! The classical parameters γ(G) and γ_R(G).

use std::time::Instant;

use super::cover::{MaskCover, MaskSet};
use super::{run_exact, CostModel, SearchStats, SolveResult, SolverConfig, SolverError, EXACT_MAX_N};
use crate::graph::Graph;
use crate::model::LabelFunction;

/// γ(G) as a unit-cost cover of V by closed neighbourhoods. The witness
/// labels the dominating set with 1 and everything else with 0.
pub fn domination_number(g: &Graph) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    let n = g.n();
    let nbr = g
        .neighbor_masks()
        .ok_or(SolverError::TooLarge { n, limit: EXACT_MAX_N })?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let sets: Vec<MaskSet> = (0..n)
        .map(|v| MaskSet {
            id: v,
            mask: nbr[v] | (1u64 << v),
            cost: 1,
        })
        .collect();
    let (chosen, size) = MaskCover::default()
        .solve(all, &sets, n as u64 + 1)
        .expect("V itself dominates");
    let mut labels = vec![0; n];
    for v in chosen {
        labels[v] = 1;
    }
    Ok(SolveResult {
        value: size,
        witness: LabelFunction::new(labels),
        optimal: true,
        stats: SearchStats {
            elapsed: start.elapsed(),
            ..Default::default()
        },
    })
}

/// γ_R(G): the zero-set solver with every defender costing exactly one
/// extra unit (label 2), which is the p ≥ Δ regime.
pub fn roman_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult, SolverError> {
    run_exact(g, CostModel::Roman, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::model::validate;
    use crate::solver::roman_naive;

    fn dominates(g: &Graph, set: &[usize]) -> bool {
        (0..g.n()).all(|v| set.contains(&v) || g.neighbors(v).iter().any(|w| set.contains(w)))
    }

    // smallest k such that some k-subset dominates
    fn brute_gamma(g: &Graph) -> u64 {
        fn pick(g: &Graph, from: usize, k: usize, cur: &mut Vec<usize>) -> bool {
            if cur.len() == k {
                return dominates(g, cur);
            }
            for v in from..g.n() {
                cur.push(v);
                if pick(g, v + 1, k, cur) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        (0..=g.n()).find(|&k| pick(g, 0, k, &mut Vec::new())).unwrap() as u64
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            domination_number(&generate(&FamilySpec::Star(5)).unwrap())
                .unwrap()
                .value,
            1
        );
        assert_eq!(
            domination_number(&generate(&FamilySpec::Cycle(6)).unwrap())
                .unwrap()
                .value,
            2
        );
        assert_eq!(domination_number(&Graph::empty(3)).unwrap().value, 3);
    }

    #[test]
    fn gamma_robertson_against_brute_force() {
        let g = generate(&FamilySpec::Robertson).unwrap();
        let r = domination_number(&g).unwrap();
        assert_eq!(r.value, brute_gamma(&g));
        let set: Vec<usize> = r.witness.ones();
        assert!(dominates(&g, &set));
        assert_eq!(set.len() as u64, r.value);
    }

    #[test]
    fn roman_examples() {
        let cfg = SolverConfig::default();
        assert_eq!(
            roman_domination_number(&generate(&FamilySpec::Star(11)).unwrap(), &cfg)
                .unwrap()
                .value,
            2
        );
        assert_eq!(roman_domination_number(&Graph::empty(3), &cfg).unwrap().value, 3);
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let r = roman_domination_number(&c5, &cfg).unwrap();
        assert_eq!(r.value, roman_naive(&c5).unwrap().value);
        assert_eq!(r.value, 4);
        assert!(validate(&c5, 2, &r.witness).unwrap().valid);
    }
}
