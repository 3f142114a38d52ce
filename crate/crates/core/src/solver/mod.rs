//! Exact computation of the p-strong Roman domination number, the Roman
//! domination number and the domination number.
//!
//! The exact solver enumerates candidate zero sets B0 by decreasing size.
//! For a fixed B0 the thresholds are fixed too, so the cheapest completion
//! labels every non-zero vertex 1 and raises a minimum-cost family of
//! defenders to their thresholds: a weighted set cover over B0.

mod classic;
mod cover;
mod naive;
mod subsets;

pub use classic::{domination_number, roman_domination_number};
pub use cover::{min_weight_cover, CoverCandidate, CoverInstance};
pub use naive::{roman_naive, solve_naive, NAIVE_MAX_N};

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::model::{ceil_div, LabelFunction};
use crate::par::Executor;
use cover::{MaskCover, MaskSet};
use subsets::{binomial, KSubsets};

/// Largest order accepted by the bitmask-based exact solvers.
pub const EXACT_MAX_N: usize = 64;

/// Zero sets evaluated per work item. Fixed so that the split, and therefore
/// every reported number, is independent of the worker count.
const CHUNK: u64 = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("p must be a positive integer")]
    ZeroP,
    #[error("graph has {n} vertices; this solver handles at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("worker count must be at least 1")]
    NoWorkers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    B0Enumeration,
    Naive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub worker_count: usize,
    pub time_limit: Option<Duration>,
    pub algorithm: Algorithm,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            worker_count: 1,
            time_limit: None,
            algorithm: Algorithm::B0Enumeration,
        }
    }
}

impl SolverConfig {
    pub fn with_workers(worker_count: usize) -> Self {
        SolverConfig {
            worker_count,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub subsets_examined: u64,
    pub pruned: u64,
    /// Wall time; left out of serialized output so results stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: u64,
    pub witness: LabelFunction,
    pub optimal: bool,
    pub stats: SearchStats,
}

/// How a defender's extra cost grows with the number of zero neighbours it
/// covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CostModel {
    /// ⌈c/p⌉.
    PStrong(u64),
    /// Always 1: Roman domination, where a defender needs exactly label 2.
    Roman,
}

impl CostModel {
    fn cost(self, covered: u64) -> u64 {
        match self {
            CostModel::PStrong(p) => ceil_div(covered, p),
            CostModel::Roman => 1,
        }
    }

    /// Effective divisor for the per-class lower bound. A defender covers at
    /// most Δ zeros, so its cost per covered zero is at least 1/min(p, Δ).
    fn divisor(self, max_degree: usize) -> u64 {
        let d = max_degree.max(1) as u64;
        match self {
            CostModel::PStrong(p) => p.min(d),
            CostModel::Roman => d,
        }
    }
}

/// Dispatches on `cfg.algorithm`.
pub fn solve(g: &Graph, p: u64, cfg: &SolverConfig) -> Result<SolveResult, SolverError> {
    match cfg.algorithm {
        Algorithm::B0Enumeration => solve_exact(g, p, cfg),
        Algorithm::Naive => solve_naive(g, p),
    }
}

/// γ_StR^p(G) by zero-set enumeration with set-cover completion.
///
/// Classes |B0| = k are visited from n−1 down; a class is skipped (and the
/// search ends) once n − k + ⌈k/min(p,Δ)⌉ reaches the incumbent. Within a
/// class the subsets are split into fixed-size chunks searched
/// independently and merged by (weight, B0 bitmask), which makes value,
/// witness and statistics identical for every worker count.
pub fn solve_exact(g: &Graph, p: u64, cfg: &SolverConfig) -> Result<SolveResult, SolverError> {
    if p == 0 {
        return Err(SolverError::ZeroP);
    }
    run_exact(g, CostModel::PStrong(p), cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Found {
    weight: u64,
    b0: u64,
    cover: u64,
}

#[derive(Default)]
struct ChunkOut {
    best: Option<Found>,
    examined: u64,
    pruned: u64,
}

struct Ctx<'a> {
    n: usize,
    nbr: &'a [u64],
    model: CostModel,
    deadline: Option<Instant>,
    timed_out: &'a AtomicBool,
}

pub(crate) fn run_exact(g: &Graph, model: CostModel, cfg: &SolverConfig) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    if cfg.worker_count == 0 {
        return Err(SolverError::NoWorkers);
    }
    let n = g.n();
    let nbr = g
        .neighbor_masks()
        .ok_or(SolverError::TooLarge { n, limit: EXACT_MAX_N })?;
    let exec = Executor::new(cfg.worker_count);
    let timed_out = AtomicBool::new(false);
    let ctx = Ctx {
        n,
        nbr: &nbr,
        model,
        deadline: cfg.time_limit.map(|t| start + t),
        timed_out: &timed_out,
    };

    // B0 = ∅ (all ones) is always feasible.
    let mut best = Found {
        weight: n as u64,
        b0: 0,
        cover: 0,
    };
    let mut stats = SearchStats::default();
    let divisor = model.divisor(g.max_degree());

    for k in (1..n).rev() {
        let bound = (n - k) as u64 + ceil_div(k as u64, divisor);
        if bound >= best.weight {
            // the bound only grows as k shrinks
            stats.pruned += (1..=k).map(|j| binomial(n, j)).sum::<u64>();
            break;
        }
        let total = binomial(n, k);
        let chunks = total.div_ceil(CHUNK) as usize;
        let incumbent = best.weight;
        let outs = exec.map(chunks, |c| {
            let first = c as u64 * CHUNK;
            let len = CHUNK.min(total - first);
            search_chunk(&ctx, k, first, len, incumbent)
        });
        for out in outs {
            stats.subsets_examined += out.examined;
            stats.pruned += out.pruned;
            if let Some(f) = out.best {
                // chunks arrive in rank order, so the first one wins ties
                if f.weight < best.weight {
                    best = f;
                }
            }
        }
        if timed_out.load(Ordering::Relaxed) {
            break;
        }
    }

    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        value: best.weight,
        witness: witness_labels(&ctx, best),
        optimal: !timed_out.load(Ordering::Relaxed),
        stats,
    })
}

fn witness_labels(ctx: &Ctx<'_>, f: Found) -> LabelFunction {
    let labels = (0..ctx.n)
        .map(|v| {
            let bit = 1u64 << v;
            if f.b0 & bit != 0 {
                0
            } else if f.cover & bit != 0 {
                1 + ctx.model.cost((ctx.nbr[v] & f.b0).count_ones() as u64)
            } else {
                1
            }
        })
        .collect();
    LabelFunction::new(labels)
}

/// Searches the k-subsets with colex ranks `first..first + len`, accepting
/// only solutions strictly lighter than `incumbent` (and than anything found
/// earlier in the chunk).
fn search_chunk(ctx: &Ctx<'_>, k: usize, first: u64, len: u64, incumbent: u64) -> ChunkOut {
    let mut out = ChunkOut::default();
    if ctx.timed_out.load(Ordering::Relaxed) {
        return out;
    }
    let n = ctx.n;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let ones = (n - k) as u64;
    let mut limit = incumbent;
    let mut cover = MaskCover::default();
    let mut sets: Vec<MaskSet> = Vec::with_capacity(n);

    for (i, b0) in KSubsets::from_rank(n, k, first).take(len as usize).enumerate() {
        if i % 256 == 0 {
            if let Some(d) = ctx.deadline {
                if Instant::now() >= d {
                    ctx.timed_out.store(true, Ordering::Relaxed);
                }
            }
            if ctx.timed_out.load(Ordering::Relaxed) {
                break;
            }
        }
        out.examined += 1;
        // every zero needs a non-zero neighbour
        let mut m = b0;
        let mut feasible = true;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if ctx.nbr[v] & !b0 == 0 {
                feasible = false;
                break;
            }
            m &= m - 1;
        }
        if !feasible {
            continue;
        }
        sets.clear();
        let mut rest = full & !b0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let covered = ctx.nbr[v] & b0;
            if covered != 0 {
                sets.push(MaskSet {
                    id: v,
                    mask: covered,
                    cost: ctx.model.cost(covered.count_ones() as u64),
                });
            }
            rest &= rest - 1;
        }
        match cover.solve(b0, &sets, limit - ones) {
            Some((chosen, cost)) => {
                let weight = ones + cost;
                limit = weight;
                out.best = Some(Found {
                    weight,
                    b0,
                    cover: chosen.iter().fold(0, |a, &v| a | (1u64 << v)),
                });
            }
            None => out.pruned += 1,
        }
    }
    out
}
