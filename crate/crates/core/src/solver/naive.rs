//! Exhaustive labeling enumeration. Shares nothing with the zero-set solver
//! except the validator, and is meant as its oracle on small graphs.

use std::time::Instant;

use super::{SearchStats, SolveResult, SolverError};
use crate::graph::Graph;
use crate::model::{max_label, validate, LabelFunction};

pub const NAIVE_MAX_N: usize = 12;

/// Tries every labeling over `{0, ..., ⌈Δ/p⌉ + 1}` lighter than the best one
/// found so far (starting from all ones) and keeps the first valid minimum.
pub fn solve_naive(g: &Graph, p: u64) -> Result<SolveResult, SolverError> {
    if p == 0 {
        return Err(SolverError::ZeroP);
    }
    let cap = max_label(g.max_degree(), p);
    enumerate(g, cap, |f| validate(g, p, f).map(|r| r.valid).unwrap_or(false))
}

/// γ_R by enumerating `{0,1,2}` labelings and checking that every 0 has a
/// 2-neighbour.
pub fn roman_naive(g: &Graph) -> Result<SolveResult, SolverError> {
    enumerate(g, 2, |f| {
        let l = f.labels();
        (0..g.n()).all(|v| l[v] != 0 || g.neighbors(v).iter().any(|&w| l[w] == 2))
    })
}

fn enumerate(g: &Graph, cap: u64, is_valid: impl Fn(&LabelFunction) -> bool) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    let n = g.n();
    if n > NAIVE_MAX_N {
        return Err(SolverError::TooLarge { n, limit: NAIVE_MAX_N });
    }
    let mut best = LabelFunction::all_ones(n);
    let mut best_weight = n as u64;
    let mut labels = vec![0u64; n];
    let mut examined = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        weight: u64,
        labels: &mut Vec<u64>,
        cap: u64,
        best: &mut LabelFunction,
        best_weight: &mut u64,
        examined: &mut u64,
        is_valid: &dyn Fn(&LabelFunction) -> bool,
    ) {
        if i == labels.len() {
            *examined += 1;
            let f = LabelFunction::new(labels.clone());
            if is_valid(&f) {
                *best_weight = weight;
                *best = f;
            }
            return;
        }
        for l in 0..=cap {
            if weight + l >= *best_weight {
                break;
            }
            labels[i] = l;
            rec(i + 1, weight + l, labels, cap, best, best_weight, examined, is_valid);
        }
        labels[i] = 0;
    }

    rec(
        0,
        0,
        &mut labels,
        cap,
        &mut best,
        &mut best_weight,
        &mut examined,
        &is_valid,
    );
    Ok(SolveResult {
        value: best_weight,
        witness: best,
        optimal: true,
        stats: SearchStats {
            subsets_examined: examined,
            pruned: 0,
            elapsed: start.elapsed(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn star_k14() {
        let g = generate(&FamilySpec::Star(5)).unwrap();
        assert_eq!(solve_naive(&g, 3).unwrap().value, 3);
    }

    #[test]
    fn fan_with_universal_vertex() {
        let spec = FamilySpec::Join(Box::new(FamilySpec::Edgeless(1)), Box::new(FamilySpec::Path(5)));
        let g = generate(&spec).unwrap();
        assert_eq!(solve_naive(&g, 3).unwrap().value, 3);
    }

    #[test]
    fn single_vertex() {
        let r = solve_naive(&Graph::empty(1), 3).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.labels(), &[1]);
    }

    #[test]
    fn roman_small() {
        assert_eq!(roman_naive(&generate(&FamilySpec::Cycle(5)).unwrap()).unwrap().value, 4);
        assert_eq!(roman_naive(&generate(&FamilySpec::Star(11)).unwrap()).unwrap().value, 2);
        assert_eq!(roman_naive(&Graph::empty(3)).unwrap().value, 3);
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            solve_naive(&Graph::empty(13), 2),
            Err(SolverError::TooLarge { n: 13, limit: 12 })
        ));
    }
}
