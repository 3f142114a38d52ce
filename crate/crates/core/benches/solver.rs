use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pstrd::graph::{generate, FamilySpec};
use pstrd::heuristics::randomized_construction;
use pstrd::par::Executor;
use pstrd::solver::{solve_exact, SolverConfig};

fn workers() -> Vec<usize> {
    let n = std::thread::available_parallelism().map_or(1, |n| n.get());
    if n > 1 {
        vec![1, n]
    } else {
        vec![1]
    }
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    let cases = [
        ("fig3_spider_p3", generate(&FamilySpec::Fig3Spider).unwrap(), 3),
        ("robertson_p3", generate(&FamilySpec::Robertson).unwrap(), 3),
        (
            "gnm_20_40_p2",
            generate(&FamilySpec::RandomGnm { n: 20, m: 40, seed: 7 }).unwrap(),
            2,
        ),
    ];
    for (name, g, p) in &cases {
        for w in workers() {
            let cfg = SolverConfig::with_workers(w);
            group.bench_with_input(BenchmarkId::new(*name, w), &w, |b, _| {
                b.iter(|| solve_exact(black_box(g), *p, &cfg).unwrap().value)
            });
        }
    }
    group.finish();
}

fn heuristic(c: &mut Criterion) {
    let mut group = c.benchmark_group("randomized_construction");
    let g = generate(&FamilySpec::RandomGnm { n: 60, m: 240, seed: 3 }).unwrap();
    for w in workers() {
        let ex = Executor::new(w);
        group.bench_with_input(BenchmarkId::new("gnm_60_240_p3", w), &w, |b, _| {
            b.iter(|| {
                randomized_construction(black_box(&g), 3, 256, 11, None, &ex)
                    .unwrap()
                    .best_weight
            })
        });
    }
    group.finish();
}

criterion_group!(benches, exact, heuristic);
criterion_main!(benches);
