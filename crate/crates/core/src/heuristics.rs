//! Randomized labelings in the style of the probabilistic upper bound, and a
//! greedy pass that lowers labels to what the zero set actually requires.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::bound_probabilistic;
use crate::graph::Graph;
use crate::model::{ceil_div, max_label, validate, LabelFunction, ModelError};
use crate::par::Executor;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HeuristicError {
    #[error("p must be a positive integer")]
    ZeroP,
    #[error("at least one trial is required")]
    NoTrials,
    #[error("no default inclusion probability: {0}; pass an explicit xi")]
    NoDefaultXi(String),
    #[error("xi must lie in [0, 1], got {0}")]
    InvalidXi(f64),
    #[error("input labeling is not valid")]
    InvalidLabeling,
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialStats {
    pub xi: f64,
    pub trials: usize,
    pub seed: u64,
    pub weights: Vec<u64>,
    /// Lightest labeling; the earliest trial wins ties.
    pub best: LabelFunction,
    pub best_weight: u64,
    pub mean_weight: f64,
    /// Sample standard deviation over √trials.
    pub std_error: f64,
}

/// One trial: each vertex joins A with probability `xi`; A gets the top
/// label, the rest of N[A] gets 0 and everything else 1. The random stream
/// depends only on `(seed, trial)`.
pub fn trial_labeling(g: &Graph, p: u64, xi: f64, seed: u64, trial: u64) -> LabelFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let in_a: Vec<bool> = (0..g.n()).map(|_| rng.gen::<f64>() < xi).collect();
    let top = max_label(g.max_degree(), p);
    let labels = (0..g.n())
        .map(|v| {
            if in_a[v] {
                top
            } else if g.neighbors(v).iter().any(|&w| in_a[w]) {
                0
            } else {
                1
            }
        })
        .collect();
    LabelFunction::new(labels)
}

/// Runs `trials` independent constructions. Without `xi` the minimizing
/// probability of the probabilistic bound is used, which needs ⌈Δ/p⌉ < δ.
pub fn randomized_construction(
    g: &Graph,
    p: u64,
    trials: usize,
    seed: u64,
    xi: Option<f64>,
    exec: &Executor,
) -> Result<TrialStats, HeuristicError> {
    if p == 0 {
        return Err(HeuristicError::ZeroP);
    }
    if trials == 0 {
        return Err(HeuristicError::NoTrials);
    }
    let xi = match xi {
        Some(x) if (0.0..=1.0).contains(&x) => x,
        Some(x) => return Err(HeuristicError::InvalidXi(x)),
        None => {
            bound_probabilistic(g, p)
                .map_err(|e| HeuristicError::NoDefaultXi(e.0))?
                .xi
        }
    };
    let labelings = exec.map(trials, |t| trial_labeling(g, p, xi, seed, t as u64));
    let weights: Vec<u64> = labelings.iter().map(LabelFunction::weight).collect();
    let best_idx = (0..trials).min_by_key(|&t| (weights[t], t)).unwrap();
    let k = trials as f64;
    let mean = weights.iter().sum::<u64>() as f64 / k;
    let var = if trials > 1 {
        weights.iter().map(|&w| (w as f64 - mean).powi(2)).sum::<f64>() / (k - 1.0)
    } else {
        0.0
    };
    Ok(TrialStats {
        xi,
        trials,
        seed,
        best_weight: weights[best_idx],
        best: labelings.into_iter().nth(best_idx).unwrap(),
        weights,
        mean_weight: mean,
        std_error: (var / k).sqrt(),
    })
}

/// Lowers every label ≥ 2, in ascending vertex order: to 1 when each of its
/// zero neighbours still has another adequate defender, otherwise to its
/// threshold. Zeros stay zeros, and the result is valid and no heavier.
pub fn tighten(g: &Graph, p: u64, f: &LabelFunction) -> Result<LabelFunction, HeuristicError> {
    if p == 0 {
        return Err(HeuristicError::ZeroP);
    }
    if !validate(g, p, f)?.valid {
        return Err(HeuristicError::InvalidLabeling);
    }
    let n = g.n();
    let zero: Vec<bool> = (0..n).map(|v| f.get(v) == 0).collect();
    let thr: Vec<u64> = (0..n)
        .map(|v| 1 + ceil_div(g.neighbors(v).iter().filter(|&&w| zero[w]).count() as u64, p))
        .collect();
    let mut labels = f.labels().to_vec();
    let adequate = |labels: &[u64], u: usize| labels[u] >= 2 && labels[u] >= thr[u];
    for v in 0..n {
        if labels[v] < 2 {
            continue;
        }
        let needed = adequate(&labels, v)
            && g.neighbors(v)
                .iter()
                .filter(|&&w| zero[w])
                .any(|&w| !g.neighbors(w).iter().any(|&u| u != v && adequate(&labels, u)));
        labels[v] = if needed { thr[v] } else { 1 };
    }
    Ok(LabelFunction::new(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::solver::{solve_exact, SolverConfig};
    use proptest::prelude::*;

    fn k55() -> Graph {
        generate(&FamilySpec::CompleteBipartite(5, 5)).unwrap()
    }

    #[test]
    fn k55_trials_are_valid_and_near_the_bound() {
        let g = k55();
        let s = randomized_construction(&g, 4, 1000, 7, None, &Executor::sequential()).unwrap();
        assert_eq!(s.weights.len(), 1000);
        for t in 0..50 {
            assert!(validate(&g, 4, &trial_labeling(&g, 4, s.xi, 7, t)).unwrap().valid);
        }
        assert!(validate(&g, 4, &s.best).unwrap().valid);
        assert!(s.mean_weight <= 8.4657 * 1.05);
        let exact = solve_exact(&g, 4, &SolverConfig::default()).unwrap().value;
        assert!(s.best_weight >= exact);
    }

    #[test]
    fn schedule_does_not_matter() {
        let g = k55();
        let a = randomized_construction(&g, 4, 300, 3, None, &Executor::new(1)).unwrap();
        let b = randomized_construction(&g, 4, 300, 3, None, &Executor::new(4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn forced_xi() {
        let g = generate(&FamilySpec::Robertson).unwrap();
        let all = randomized_construction(&g, 3, 5, 0, Some(1.0), &Executor::sequential()).unwrap();
        assert!(all.weights.iter().all(|&w| w == 19 * 3));
        let none = randomized_construction(&g, 3, 5, 0, Some(0.0), &Executor::sequential()).unwrap();
        assert!(none.weights.iter().all(|&w| w == 19));
    }

    #[test]
    fn errors() {
        let star = generate(&FamilySpec::Star(11)).unwrap();
        let ex = Executor::sequential();
        assert!(matches!(
            randomized_construction(&star, 3, 10, 0, None, &ex),
            Err(HeuristicError::NoDefaultXi(_))
        ));
        assert!(randomized_construction(&star, 3, 10, 0, Some(0.3), &ex).is_ok());
        assert_eq!(
            randomized_construction(&star, 3, 10, 0, Some(1.5), &ex),
            Err(HeuristicError::InvalidXi(1.5))
        );
        assert_eq!(
            randomized_construction(&star, 3, 0, 0, Some(0.5), &ex),
            Err(HeuristicError::NoTrials)
        );
        let mut bad = vec![1; 11];
        bad[3] = 0;
        assert_eq!(
            tighten(&star, 3, &LabelFunction::new(bad)),
            Err(HeuristicError::InvalidLabeling)
        );
    }

    #[test]
    fn tighten_star() {
        let star = generate(&FamilySpec::Star(11)).unwrap();
        let mut l = vec![0; 11];
        l[0] = 4;
        let f = LabelFunction::new(l.clone());
        assert_eq!(tighten(&star, 4, &f).unwrap(), f);
        // p = 10: top label is 2 and the threshold of the centre is 2
        l[0] = 2;
        let f = LabelFunction::new(l);
        assert_eq!(tighten(&star, 10, &f).unwrap(), f);
        // a redundant strong leaf drops to 1
        let mut l = vec![0; 11];
        l[0] = 4;
        l[5] = 4;
        let t = tighten(&star, 3, &LabelFunction::new(l)).unwrap();
        assert_eq!(t.get(0), 1 + 3);
        assert_eq!(t.get(5), 1);
    }

    #[test]
    fn tighten_lowers_k55_trials() {
        let g = k55();
        let s = randomized_construction(&g, 4, 200, 7, None, &Executor::sequential()).unwrap();
        let mut strict = 0;
        for t in 0..200 {
            let f = trial_labeling(&g, 4, s.xi, 7, t);
            let zeros = f.zeros();
            let slack =
                (0..10).any(|v| f.get(v) == 3 && g.neighbors(v).iter().filter(|w| zeros.contains(w)).count() < 5);
            let tf = tighten(&g, 4, &f).unwrap();
            assert!(validate(&g, 4, &tf).unwrap().valid);
            assert_eq!(tf.zeros(), zeros);
            if slack {
                assert!(tf.weight() < f.weight());
                strict += 1;
            }
        }
        assert!(strict > 0);
    }

    proptest! {
        #[test]
        fn tighten_is_idempotent_and_monotone(n in 3usize..10, edges in proptest::collection::vec((0usize..10, 0usize..10), 0..25), p in 1u64..5, seed: u64, xi in 0.0f64..=1.0) {
            let g = Graph::from_edges(n, edges.into_iter().filter(|&(u, v)| u < n && v < n && u != v)).unwrap();
            let f = trial_labeling(&g, p, xi, seed, 0);
            prop_assert!(validate(&g, p, &f).unwrap().valid);
            let once = tighten(&g, p, &f).unwrap();
            prop_assert!(validate(&g, p, &once).unwrap().valid);
            prop_assert!(once.weight() <= f.weight());
            prop_assert_eq!(once.zeros(), f.zeros());
            prop_assert_eq!(tighten(&g, p, &once).unwrap(), once);
        }
    }
}
