//! Exact minimum-cost set cover by backtracking, used for the labeling
//! completion once the zero set is fixed.

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::model::ceil_div;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCandidate {
    pub vertex: Vertex,
    pub covered: Vec<Vertex>,
    pub cost: u64,
}

/// Elements to cover and the weighted sets available to cover them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverInstance {
    pub elements: Vec<Vertex>,
    pub candidates: Vec<CoverCandidate>,
}

impl CoverInstance {
    /// The completion problem for a fixed zero set: every vertex outside the
    /// set that touches it may be raised from 1 to its threshold, at cost
    /// ⌈|N(v) ∩ B0| / p⌉, to cover its zero neighbours.
    pub fn for_zero_set(g: &Graph, zero_set: &[Vertex], p: u64) -> Self {
        let mut zero = vec![false; g.n()];
        for &v in zero_set {
            zero[v] = true;
        }
        let mut elements = zero_set.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let candidates = (0..g.n())
            .filter(|&v| !zero[v])
            .filter_map(|v| {
                let covered: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| zero[w]).collect();
                (!covered.is_empty()).then(|| CoverCandidate {
                    vertex: v,
                    cost: ceil_div(covered.len() as u64, p),
                    covered,
                })
            })
            .collect();
        CoverInstance { elements, candidates }
    }
}

/// Minimum-cost cover of all elements with cost strictly below `budget`.
///
/// Branches on the uncovered element with the fewest coverers (lowest
/// element first on ties) and tries its coverers by ascending vertex id, so
/// the returned cover is the first optimum in that search order.
///
/// # Panics
/// If the instance has more than 64 distinct elements.
pub fn min_weight_cover(inst: &CoverInstance, budget: u64) -> Option<(Vec<Vertex>, u64)> {
    let mut elements = inst.elements.clone();
    elements.sort_unstable();
    elements.dedup();
    assert!(elements.len() <= 64, "cover instances are limited to 64 elements");
    let bit = |e: Vertex| elements.binary_search(&e).ok().map(|i| 1u64 << i);

    let mut order: Vec<usize> = (0..inst.candidates.len()).collect();
    order.sort_by_key(|&i| inst.candidates[i].vertex);
    let sets: Vec<MaskSet> = order
        .iter()
        .map(|&i| {
            let c = &inst.candidates[i];
            MaskSet {
                id: i,
                mask: c.covered.iter().filter_map(|&e| bit(e)).fold(0, |a, b| a | b),
                cost: c.cost,
            }
        })
        .filter(|s| s.mask != 0)
        .collect();
    let all = if elements.len() == 64 {
        u64::MAX
    } else {
        (1u64 << elements.len()) - 1
    };
    let mut search = MaskCover::default();
    let (chosen, cost) = search.solve(all, &sets, budget)?;
    let mut picked: Vec<Vertex> = chosen.iter().map(|&i| inst.candidates[i].vertex).collect();
    picked.sort_unstable();
    Some((picked, cost))
}

/// A candidate set over element bit positions. `id` is opaque to the search
/// and handed back in the solution.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MaskSet {
    pub id: usize,
    pub mask: u64,
    pub cost: u64,
}

/// Reusable backtracking state; buffers survive across `solve` calls.
#[derive(Default)]
pub(crate) struct MaskCover {
    sets: Vec<MaskSet>,
    coverers: Vec<Vec<u32>>,
    // cheapest ratio cost/|mask| as a fraction (num, den)
    ratio: (u64, u64),
    best_cost: u64,
    best: Vec<u32>,
    stack: Vec<u32>,
    found: bool,
}

impl MaskCover {
    /// `sets` must be in the preferred branching order. Returns ids of the
    /// chosen sets (in branching order) and the total cost, if some cover
    /// costs less than `budget`.
    pub fn solve(&mut self, elements: u64, sets: &[MaskSet], budget: u64) -> Option<(Vec<usize>, u64)> {
        if elements == 0 {
            return (budget > 0).then(|| (Vec::new(), 0));
        }
        self.sets.clear();
        self.sets.extend_from_slice(sets);
        if self.coverers.len() < 64 {
            self.coverers.resize(64, Vec::new());
        }
        for c in &mut self.coverers {
            c.clear();
        }
        self.ratio = (u64::MAX, 1);
        for (i, s) in self.sets.iter().enumerate() {
            let mut m = s.mask & elements;
            let size = m.count_ones() as u64;
            if size == 0 {
                continue;
            }
            if (s.cost as u128) * (self.ratio.1 as u128) < (self.ratio.0 as u128) * size as u128 {
                self.ratio = (s.cost, size);
            }
            while m != 0 {
                let e = m.trailing_zeros() as usize;
                self.coverers[e].push(i as u32);
                m &= m - 1;
            }
        }
        self.best_cost = budget;
        self.found = false;
        self.best.clear();
        self.stack.clear();
        self.dfs(elements, 0);
        if !self.found {
            return None;
        }
        Some((
            self.best.iter().map(|&i| self.sets[i as usize].id).collect(),
            self.best_cost,
        ))
    }

    fn lower_bound(&self, uncovered: u64) -> u64 {
        let u = uncovered.count_ones() as u64;
        let (num, den) = self.ratio;
        let by_ratio = if num == u64::MAX { 0 } else { (u * num).div_ceil(den) };
        let mut by_element = 0;
        let mut m = uncovered;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            let cheapest = self.coverers[e]
                .iter()
                .map(|&i| self.sets[i as usize].cost)
                .min()
                .unwrap_or(u64::MAX);
            by_element = by_element.max(cheapest);
            m &= m - 1;
        }
        by_ratio.max(by_element)
    }

    fn dfs(&mut self, uncovered: u64, cost: u64) {
        if uncovered == 0 {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best.clone_from(&self.stack);
                self.found = true;
            }
            return;
        }
        let lb = self.lower_bound(uncovered);
        if lb == u64::MAX || cost + lb >= self.best_cost {
            return;
        }
        // uncovered element with the fewest coverers, lowest index on ties
        let mut pick = usize::MAX;
        let mut fewest = usize::MAX;
        let mut m = uncovered;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            let k = self.coverers[e].len();
            if k < fewest {
                fewest = k;
                pick = e;
            }
            m &= m - 1;
        }
        for j in 0..self.coverers[pick].len() {
            let i = self.coverers[pick][j];
            let s = self.sets[i as usize];
            self.stack.push(i);
            self.dfs(uncovered & !s.mask, cost + s.cost);
            self.stack.pop();
        }
    }
}
