use proptest::prelude::*;
use pstrd::graph::{generate, FamilySpec, Graph};
use pstrd::solver::{domination_number, roman_domination_number, roman_naive, solve_exact, solve_naive, SolverConfig};
use pstrd::validate;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_matches_brute_force(g in small_graph(8), p in 1u64..7) {
        let cfg = SolverConfig::default();
        let fast = solve_exact(&g, p, &cfg).unwrap();
        let slow = solve_naive(&g, p).unwrap();
        prop_assert_eq!(fast.value, slow.value);
        let rep = validate(&g, p, &fast.witness).unwrap();
        prop_assert!(rep.valid);
        prop_assert_eq!(rep.weight, fast.value);
        prop_assert!(fast.optimal);
    }

    #[test]
    fn roman_matches_brute_force(g in small_graph(8)) {
        let fast = roman_domination_number(&g, &SolverConfig::default()).unwrap().value;
        prop_assert_eq!(fast, roman_naive(&g).unwrap().value);
    }

    #[test]
    fn monotone_in_p_and_between_classic_parameters(g in small_graph(8)) {
        let cfg = SolverConfig::default();
        let d = g.max_degree() as u64;
        let values: Vec<u64> = (1..=d + 2).map(|p| solve_exact(&g, p, &cfg).unwrap().value).collect();
        prop_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(values[0], g.n() as u64);
        let gamma_r = roman_domination_number(&g, &cfg).unwrap().value;
        prop_assert_eq!(*values.last().unwrap(), gamma_r);
        let gamma = domination_number(&g).unwrap().value;
        prop_assert!(gamma <= gamma_r && gamma_r <= 2 * gamma);
    }

    #[test]
    fn worker_count_does_not_change_the_answer(n in 8usize..=16, density in 0.1f64..0.8, seed: u64, p in 2u64..5) {
        let m = ((n * (n - 1) / 2) as f64 * density) as usize;
        let g = generate(&FamilySpec::RandomGnm { n, m, seed }).unwrap();
        let one = solve_exact(&g, p, &SolverConfig::with_workers(1)).unwrap();
        let four = solve_exact(&g, p, &SolverConfig::with_workers(4)).unwrap();
        prop_assert_eq!(one.value, four.value);
        prop_assert_eq!(one.witness, four.witness);
        prop_assert_eq!(one.stats.subsets_examined, four.stats.subsets_examined);
        prop_assert_eq!(one.stats.pruned, four.stats.pruned);
    }
}

#[test]
fn robertson_graph() {
    let g = generate(&FamilySpec::Robertson).unwrap();
    let r = solve_exact(&g, 3, &SolverConfig::with_workers(2)).unwrap();
    assert_eq!(r.value, 11);
    assert_eq!(validate(&g, 3, &r.witness).unwrap().weight, 11);
}

#[test]
fn star_values() {
    let g = generate(&FamilySpec::Star(11)).unwrap();
    let cfg = SolverConfig::default();
    assert_eq!(solve_exact(&g, 3, &cfg).unwrap().value, 5);
    assert_eq!(roman_domination_number(&g, &cfg).unwrap().value, 2);
    assert_eq!(domination_number(&g).unwrap().value, 1);
}

#[test]
fn order_limit() {
    let g = Graph::empty(65);
    assert!(solve_exact(&g, 3, &SolverConfig::default()).is_err());
    assert!(solve_exact(&Graph::empty(3), 0, &SolverConfig::default()).is_err());
}
