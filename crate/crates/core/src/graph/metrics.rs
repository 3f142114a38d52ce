use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Acyclic => s.serialize_str("acyclic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub girth: Girth,
    pub connected: bool,
    pub bipartite: bool,
    pub chordal: bool,
    /// `Some(r)` when every vertex has degree r.
    pub regular_degree: Option<usize>,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let (max_degree, min_degree) = (g.max_degree(), g.min_degree());
    GraphMetrics {
        n: g.n(),
        m: g.m(),
        max_degree,
        min_degree,
        girth: girth(g),
        connected: is_connected(g),
        bipartite: is_bipartite(g),
        chordal: is_chordal(g),
        regular_degree: (g.n() > 0 && max_degree == min_degree).then_some(max_degree),
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.components().len() <= 1
}

/// BFS from every vertex; a non-tree edge `uw` closes a closed walk of
/// length `d(u) + d(w) + 1` containing a cycle, and the minimum over all
/// roots is attained by a shortest cycle.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Maximum cardinality search followed by a perfect elimination ordering
/// check (Tarjan–Yannakakis).
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    // MCS: `order[i]` is the i-th vertex visited; eliminating in reverse
    // visit order is a PEO iff the graph is chordal.
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut pos = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for i in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        pos[v] = i;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    // For each v, its earlier-visited neighbours must form a clique. It is
    // enough to check that they are all adjacent to the latest of them.
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
            for &w in &earlier {
                if w != parent && !g.has_edge(w, parent) {
                    return false;
                }
            }
        }
    }
    true
}
