use pstrd::bounds::bound_probabilistic;
use pstrd::graph::{generate, FamilySpec};
use pstrd::heuristics::{randomized_construction, tighten, trial_labeling};
use pstrd::par::Executor;
use pstrd::solver::{solve_exact, SolverConfig};
use pstrd::suite::connected_fuzz_graphs;
use pstrd::validate;

#[test]
fn construction_on_k55() {
    let g = generate(&FamilySpec::CompleteBipartite(5, 5)).unwrap();
    let stats = randomized_construction(&g, 4, 1000, 7, None, &Executor::new(4)).unwrap();
    let bound = bound_probabilistic(&g, 4).unwrap().value;
    assert!(
        stats.mean_weight <= bound + 3.0 * stats.std_error,
        "{} vs {bound}",
        stats.mean_weight
    );
    let opt = solve_exact(&g, 4, &SolverConfig::default()).unwrap().value;
    assert!(stats.weights.iter().all(|&w| w >= opt));
    assert_eq!(stats.best_weight, *stats.weights.iter().min().unwrap());
}

#[test]
fn trials_are_valid_and_reproducible() {
    for g in connected_fuzz_graphs(30, 4) {
        let p = 3;
        let seq = randomized_construction(&g, p, 64, 11, Some(0.3), &Executor::sequential()).unwrap();
        let par = randomized_construction(&g, p, 64, 11, Some(0.3), &Executor::new(3)).unwrap();
        assert_eq!(seq, par);
        for t in 0..64 {
            let f = trial_labeling(&g, p, 0.3, 11, t);
            assert!(validate(&g, p, &f).unwrap().valid);
            assert_eq!(f.weight(), seq.weights[t as usize]);
        }
    }
}

#[test]
fn tightening_keeps_validity_and_optimum() {
    for g in connected_fuzz_graphs(30, 12) {
        for p in 3..g.max_degree() as u64 {
            let opt = solve_exact(&g, p, &SolverConfig::default()).unwrap().value;
            for t in 0..8 {
                let f = trial_labeling(&g, p, 0.25, 3, t);
                let h = tighten(&g, p, &f).unwrap();
                let rep = validate(&g, p, &h).unwrap();
                assert!(rep.valid);
                assert!(h.weight() <= f.weight() && h.weight() >= opt);
            }
        }
    }
}

#[test]
fn bad_arguments() {
    let g = generate(&FamilySpec::Cycle(5)).unwrap();
    let exec = Executor::sequential();
    assert!(randomized_construction(&g, 0, 10, 0, Some(0.5), &exec).is_err());
    assert!(randomized_construction(&g, 2, 0, 0, Some(0.5), &exec).is_err());
    assert!(randomized_construction(&g, 2, 10, 0, Some(1.5), &exec).is_err());
    assert!(randomized_construction(&g, 1, 10, 0, None, &exec).is_err());
}
