use pstrd::bounds::{bound_lowbound, bound_probabilistic, bounds_report, corollary_b0_min, lemma_low_b0, Source};
use pstrd::graph::{generate, is_connected, FamilySpec, Graph};
use pstrd::solver::{solve_exact, SolverConfig};
use pstrd::suite::{connected_fuzz_graphs, universal_graphs};

fn exact(g: &Graph, p: u64) -> pstrd::SolveResult {
    solve_exact(g, p, &SolverConfig::default()).unwrap()
}

#[test]
fn robertson_report() {
    let g = generate(&FamilySpec::Robertson).unwrap();
    let r = bounds_report(&g, 3, true).unwrap();
    assert_eq!(r.best_lower, Some(7));
    assert_eq!(r.best_upper, Some(11));
    let by_name = |n: &str| r.entries.iter().find(|e| e.name == n).unwrap();
    assert_eq!(by_name("regular").integer_value(), Some(11));
    assert_eq!(by_name("low_b0").integer_value(), Some(11));
    assert_eq!(by_name("low_b0").source, Source::SolverAssisted);
    assert!(by_name("probabilistic").applicable);
    assert!(r.entries.iter().all(|e| e.brackets(11)));
}

#[test]
fn every_entry_brackets_the_exact_value() {
    for (i, g) in connected_fuzz_graphs(60, 99).iter().enumerate() {
        for p in 3..g.max_degree() as u64 {
            let v = exact(g, p).value;
            let r = bounds_report(g, p, true).unwrap();
            for e in &r.entries {
                assert!(e.brackets(v), "graph {i} p = {p}: {e:?} vs {v}");
            }
            assert!(r.best_lower.unwrap() <= v && v <= r.best_upper.unwrap());
        }
    }
}

#[test]
fn zero_count_of_optimal_labelings() {
    for g in connected_fuzz_graphs(40, 5) {
        let n = g.n();
        for p in 3..g.max_degree() as u64 {
            let r = exact(&g, p);
            let b0 = r.witness.zeros().len();
            assert!(lemma_low_b0(n, p, b0) <= r.value);
            assert!(corollary_b0_min(n, p, r.value).unwrap() <= b0 as u64);
        }
    }
}

#[test]
fn lowbound_tight_for_universal_vertex() {
    for g in universal_graphs(40, 17) {
        let n = g.n();
        for p in 3..n as u64 - 1 {
            assert_eq!(bound_lowbound(n, p), exact(&g, p).value);
        }
    }
}

#[test]
fn lowbound_equality_when_n_is_one_mod_p() {
    for g in connected_fuzz_graphs(120, 31) {
        let n = g.n();
        for p in 3..g.max_degree() as u64 {
            if n as u64 % p != 1 {
                continue;
            }
            let tight = exact(&g, p).value == bound_lowbound(n, p);
            assert_eq!(
                tight,
                g.max_degree() == n - 1,
                "n = {n} p = {p} {:?}",
                g.edges().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn probabilistic_bound_on_k55() {
    let g = generate(&FamilySpec::CompleteBipartite(5, 5)).unwrap();
    let b = bound_probabilistic(&g, 4).unwrap();
    assert!((b.value - 8.4657).abs() < 5e-5, "{}", b.value);
    assert!((b.xi - (2.0f64).ln() / 6.0).abs() < 1e-12);
    assert!(bound_probabilistic(&g, 1).is_err());
}

#[test]
fn disconnected_graphs_lose_connected_bounds() {
    let g = generate(&FamilySpec::Star(6))
        .unwrap()
        .disjoint_union(&generate(&FamilySpec::Star(6)).unwrap());
    assert!(!is_connected(&g));
    let r = bounds_report(&g, 3, false).unwrap();
    let low = r.entries.iter().find(|e| e.name == "lowbound").unwrap();
    assert!(!low.applicable);
}
