//! The reproduction suite: fixed fixtures with pinned tolerances, each
//! reported as a single pass/fail line.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{bounds_report, lemma_low_b0};
use crate::families::{value_bistar, value_complete_bipartite};
use crate::graph::{generate, is_connected, FamilySpec, Graph};
use crate::heuristics::randomized_construction;
use crate::model::validate;
use crate::par::Executor;
use crate::reduction::{
    build_reduction, paper_example, proof_labeling, verify_reduction_equivalence, Variant, X3CInstance, VERIFY_MAX_N,
};
use crate::solver::{roman_domination_number, solve_exact, solve_naive, SolveResult, SolverConfig};

pub const ROBERTSON_LIMIT: Duration = Duration::from_secs(120);
pub const STAR_LIMIT: Duration = Duration::from_secs(1);
pub const BIPARTITE_SWEEP_LIMIT: Duration = Duration::from_secs(60);
/// Closed-form value of the probabilistic bound on K_{5,5} with p = 4, to the
/// precision the fixture is stated with.
pub const K55_BOUND: f64 = 8.4657;
pub const K55_TRIALS: usize = 1000;
pub const K55_SEED: u64 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

fn result(id: u32, name: &'static str, failures: &[String], ok_detail: String) -> CriterionResult {
    let passed = failures.is_empty();
    let detail = if passed {
        ok_detail
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        format!("{} failure(s): {}", failures.len(), shown.join("; "))
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
    }
}

fn exact(g: &Graph, p: u64, cfg: &SolverConfig) -> SolveResult {
    solve_exact(g, p, cfg).expect("suite graphs are within solver limits")
}

fn gen(spec: FamilySpec) -> Graph {
    generate(&spec).expect("suite families are well formed")
}

pub fn robertson_value(cfg: &SolverConfig) -> CriterionResult {
    let g = gen(FamilySpec::Robertson);
    let start = Instant::now();
    let r = exact(&g, 3, cfg);
    let took = start.elapsed();
    let mut f = Vec::new();
    if r.value != 11 || !r.optimal {
        f.push(format!("value {} optimal {}", r.value, r.optimal));
    }
    if took > ROBERTSON_LIMIT {
        f.push(format!("took {took:?}"));
    }
    result(1, "robertson value", &f, format!("γ^3 = 11, optimal, {took:.2?}"))
}

pub fn star_triple(cfg: &SolverConfig) -> CriterionResult {
    let g = gen(FamilySpec::Star(11));
    let mut f = Vec::new();
    let mut timed = |what: String, want: u64, run: &dyn Fn() -> SolveResult| {
        let start = Instant::now();
        let r = run();
        let took = start.elapsed();
        if r.value != want || !r.optimal || took > STAR_LIMIT {
            f.push(format!("{what}: got {} in {took:?}, want {want}", r.value));
        }
    };
    timed("γ_R".into(), 2, &|| roman_domination_number(&g, cfg).unwrap());
    for (p, want) in [(2, 6), (3, 5), (4, 4)] {
        timed(format!("p = {p}"), want, &|| exact(&g, p, cfg));
    }
    result(2, "star K_{1,10}", &f, "γ_R = 2, γ^2 = 6, γ^3 = 5, γ^4 = 4".into())
}

pub fn complete_bipartite_sweep(cfg: &SolverConfig) -> CriterionResult {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut cases = 0;
    for s in 4..=6u64 {
        for r in 2..=s {
            for p in 3..s {
                let want = value_complete_bipartite(r, s, p).value.expect("in range");
                let got = exact(&gen(FamilySpec::CompleteBipartite(r as usize, s as usize)), p, cfg).value;
                cases += 1;
                if got != want {
                    f.push(format!("K_{{{r},{s}}} p = {p}: solver {got}, formula {want}"));
                }
            }
        }
    }
    let took = start.elapsed();
    if took > BIPARTITE_SWEEP_LIMIT {
        f.push(format!("took {took:?}"));
    }
    result(
        3,
        "complete bipartite sweep",
        &f,
        format!("{cases} cases match, {took:.2?}"),
    )
}

pub fn bistar_sweep(cfg: &SolverConfig) -> CriterionResult {
    let mut f = Vec::new();
    let mut cases = 0;
    for s in 3..=6u64 {
        for r in 1..=s {
            for p in 3..=s {
                let want = value_bistar(r, s, p).value.expect("in range");
                let got = exact(&gen(FamilySpec::DoubleStar(r as usize, s as usize)), p, cfg).value;
                cases += 1;
                if got != want {
                    f.push(format!("T_{{{r},{s}}} p = {p}: solver {got}, formula {want}"));
                }
            }
        }
    }
    result(4, "bi-star sweep", &f, format!("{cases} cases match"))
}

pub fn fig3_sharpness(cfg: &SolverConfig) -> CriterionResult {
    let r = exact(&gen(FamilySpec::Fig3Spider), 3, cfg);
    let bound = lemma_low_b0(14, 3, 6);
    let mut f = Vec::new();
    if r.value != 10 || bound != 10 {
        f.push(format!("solver {}, lemma {bound}", r.value));
    }
    result(5, "spider sharpness", &f, "γ^3 = 10 = n - ⌊2·6/3⌋".into())
}

/// `count` graphs join(K_1, H), n = |H| + 1 drawn from `5..=12`.
pub fn universal_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let h = rng.gen_range(4..=11usize);
            let m = rng.gen_range(0..=h * (h - 1) / 2);
            let inner = FamilySpec::RandomGnm {
                n: h,
                m,
                seed: rng.gen(),
            };
            gen(FamilySpec::Join(Box::new(FamilySpec::Edgeless(1)), Box::new(inner)))
        })
        .collect()
}

pub fn universal_equality(cfg: &SolverConfig) -> CriterionResult {
    let mut f = Vec::new();
    let mut cases = 0;
    for (i, g) in universal_graphs(50, 6).iter().enumerate() {
        let n = g.n() as u64;
        for p in 3..=n - 2 {
            let want = (n + p - 1).div_ceil(p);
            let got = exact(g, p, cfg).value;
            cases += 1;
            if got != want {
                f.push(format!("graph {i} (n = {n}) p = {p}: solver {got}, formula {want}"));
            }
        }
    }
    result(6, "universal vertex", &f, format!("{cases} (graph, p) pairs match"))
}

/// `count` seeded G(n, m) graphs with n in `lo..=hi`.
pub fn random_graphs(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let m = rng.gen_range(0..=n * (n - 1) / 2);
            gen(FamilySpec::RandomGnm { n, m, seed: rng.gen() })
        })
        .collect()
}

pub fn oracle_equivalence(cfg: &SolverConfig) -> CriterionResult {
    let mut f = Vec::new();
    let mut cases = 0;
    for (i, g) in random_graphs(200, 1, 9, 7).iter().enumerate() {
        let d = g.max_degree() as u64;
        let roman = roman_domination_number(g, cfg).unwrap().value;
        for p in 1..=d + 1 {
            let got = exact(g, p, cfg).value;
            let naive = solve_naive(g, p).unwrap().value;
            cases += 1;
            if got != naive {
                f.push(format!("graph {i} p = {p}: solver {got}, oracle {naive}"));
            }
            if p == 1 && got != g.n() as u64 {
                f.push(format!("graph {i} p = 1: {got} != n"));
            }
            if p >= d && got != roman {
                f.push(format!("graph {i} p = {p} >= Δ: {got} != γ_R {roman}"));
            }
        }
    }
    result(7, "oracle equivalence", &f, format!("{cases} (graph, p) pairs agree"))
}

/// Seeded connected graphs with n in `5..=12` and Δ ≥ 4, by rejection.
pub fn connected_fuzz_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(5..=12usize);
        let m = rng.gen_range(n - 1..=n * (n - 1) / 2);
        let g = gen(FamilySpec::RandomGnm { n, m, seed: rng.gen() });
        if g.max_degree() >= 4 && is_connected(&g) {
            out.push(g);
        }
    }
    out
}

pub fn bound_soundness(cfg: &SolverConfig) -> CriterionResult {
    let mut f = Vec::new();
    let mut checks = 0;
    for (i, g) in connected_fuzz_graphs(300, 8).iter().enumerate() {
        let d = g.max_degree() as u64;
        let values: Vec<u64> = (3..d).map(|p| exact(g, p, cfg).value).collect();
        for (k, p) in (3..d).enumerate() {
            let report = bounds_report(g, p, true).unwrap();
            for e in &report.entries {
                checks += 1;
                if !e.brackets(values[k]) {
                    f.push(format!(
                        "graph {i} p = {p}: {} = {:?} vs exact {}",
                        e.name, e.value, values[k]
                    ));
                }
            }
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            f.push(format!("graph {i}: not monotone in p: {values:?}"));
        }
    }
    result(
        8,
        "bound soundness",
        &f,
        format!("{checks} entry checks, monotone in p"),
    )
}

/// Instances whose reduction graph stays within [`VERIFY_MAX_N`] vertices
/// for p = 3: every single-clause instance with q = 2, the one-clause and
/// repeated-clause instances with q = 1, and a spread of single clauses with
/// q = 3. Only the q = 1 instances have covers.
pub fn x3c_corpus() -> Vec<X3CInstance> {
    let mut out = vec![
        X3CInstance::new(1, vec![[1, 2, 3]]).unwrap(),
        X3CInstance::new(1, vec![[1, 2, 3], [1, 2, 3]]).unwrap(),
    ];
    let triples = |m: usize| {
        let mut v = Vec::new();
        for a in 1..=m {
            for b in a + 1..=m {
                for c in b + 1..=m {
                    v.push([a, b, c]);
                }
            }
        }
        v
    };
    out.extend(triples(6).into_iter().map(|c| X3CInstance::new(2, vec![c]).unwrap()));
    out.extend(
        triples(9)
            .into_iter()
            .step_by(12)
            .map(|c| X3CInstance::new(3, vec![c]).unwrap()),
    );
    out
}

/// Reduction size for a given instance and p.
pub fn reduction_order(inst: &X3CInstance, p: u64) -> usize {
    3 * inst.q() + inst.t() * (2 * p as usize + 1)
}

pub fn reduction_equivalence(cfg: &SolverConfig) -> CriterionResult {
    let mut f = Vec::new();
    let mut runs = 0;
    let corpus = x3c_corpus();
    for (i, inst) in corpus.iter().enumerate() {
        for p in [3, 4] {
            if reduction_order(inst, p) > VERIFY_MAX_N {
                continue;
            }
            for variant in [Variant::Bipartite, Variant::Chordal] {
                let rep = verify_reduction_equivalence(inst, p, variant, cfg).unwrap();
                runs += 1;
                if !rep.holds {
                    f.push(format!(
                        "instance {i} p = {p} {variant}: cover {}, γ = {} vs r = {}",
                        if rep.cover.is_some() { "yes" } else { "no" },
                        rep.gamma,
                        rep.r_threshold
                    ));
                }
            }
        }
    }
    let inst = paper_example();
    let res = build_reduction(&inst, 3, Variant::Bipartite).unwrap();
    let v = validate(&res.graph, 3, &proof_labeling(&res, &[1, 4]).unwrap()).unwrap();
    if !v.valid || v.weight != 19 {
        f.push(format!(
            "41-vertex proof labeling: valid {} weight {}",
            v.valid, v.weight
        ));
    }
    result(
        9,
        "reduction equivalence",
        &f,
        format!(
            "{} instances, {runs} runs hold; 41-vertex proof labeling valid with weight 19",
            corpus.len()
        ),
    )
}

pub fn probabilistic_construction(cfg: &SolverConfig) -> CriterionResult {
    let g = gen(FamilySpec::CompleteBipartite(5, 5));
    let stats = randomized_construction(&g, 4, K55_TRIALS, K55_SEED, None, &Executor::new(cfg.worker_count)).unwrap();
    let mut f = Vec::new();
    let invalid = (0..K55_TRIALS as u64)
        .filter(|&t| {
            let l = crate::heuristics::trial_labeling(&g, 4, stats.xi, K55_SEED, t);
            !validate(&g, 4, &l).unwrap().valid
        })
        .count();
    if invalid > 0 {
        f.push(format!("{invalid} invalid trials"));
    }
    let ceiling = K55_BOUND + 3.0 * stats.std_error;
    if stats.mean_weight > ceiling {
        f.push(format!("mean {:.4} above {ceiling:.4}", stats.mean_weight));
    }
    let opt = exact(&g, 4, cfg).value;
    if stats.best_weight < opt {
        f.push(format!("trial weight {} below optimum {opt}", stats.best_weight));
    }
    result(
        10,
        "probabilistic construction",
        &f,
        format!(
            "{K55_TRIALS} valid trials, mean {:.4} <= {ceiling:.4}, min {} >= {opt}",
            stats.mean_weight, stats.best_weight
        ),
    )
}

/// Criteria 1 through 10, in order.
pub fn run_all(cfg: &SolverConfig) -> Vec<CriterionResult> {
    vec![
        robertson_value(cfg),
        star_triple(cfg),
        complete_bipartite_sweep(cfg),
        bistar_sweep(cfg),
        fig3_sharpness(cfg),
        universal_equality(cfg),
        oracle_equivalence(cfg),
        bound_soundness(cfg),
        reduction_equivalence(cfg),
        probabilistic_construction(cfg),
    ]
}
