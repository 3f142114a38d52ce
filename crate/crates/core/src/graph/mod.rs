//! Simple undirected graphs on dense vertex ids `0..n`.

mod generators;
mod io;
mod metrics;

pub use generators::{generate, FamilySpec};
pub use io::{parse_graph, write_graph, GraphFormat};
pub use metrics::{girth, is_bipartite, is_chordal, is_connected, metrics, Girth, GraphMetrics};

use thiserror::Error;

/// Vertex id.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("embedded graph data failed validation: {0}")]
    Validation(String),
}

/// An immutable simple graph stored as sorted adjacency rows.
///
/// Symmetry, loop-freeness and the absence of parallel edges are enforced by
/// every constructor, so a `Graph` value is always well formed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to one; self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
            m2 += row.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Open neighbourhoods as bitmasks. Only defined for `n <= 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|row| row.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
                .collect(),
        )
    }

    /// G ∨ H: the disjoint union plus every edge between the two sides.
    /// Vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let na = self.n();
        let nb = other.n();
        let mut adj: Vec<Vec<Vertex>> = Vec::with_capacity(na + nb);
        for row in &self.adj {
            let mut r = row.clone();
            r.extend(na..na + nb);
            adj.push(r);
        }
        for row in &other.adj {
            let mut r: Vec<Vertex> = (0..na).collect();
            r.extend(row.iter().map(|&v| v + na));
            adj.push(r);
        }
        Graph {
            adj,
            m: self.m + other.m + na * nb,
        }
    }

    /// Disjoint union, `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let na = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row.iter().map(|&v| v + na).collect::<Vec<_>>()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// The subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter_map(move |&w| (index[w] != usize::MAX && i < index[w]).then_some((i, index[w])))
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>()).expect("induced subgraph is simple")
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_collapse_and_loops_fail() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1);
        let star = k1.join(&Graph::empty(4));
        assert_eq!((star.n(), star.m(), star.max_degree(), star.min_degree()), (5, 4, 4, 1));

        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let fan = k1.join(&p4);
        assert_eq!((fan.n(), fan.max_degree()), (5, 4));
        assert!(fan.has_edge(1, 2) && fan.has_edge(0, 4));

        let k23 = Graph::empty(2).join(&Graph::empty(3));
        assert_eq!(k23.m(), 6);
        assert!(!k23.has_edge(0, 1) && !k23.has_edge(2, 3));
        assert!((2..5).all(|v| k23.degree(v) == 2));
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        let h = g.induced(&[3, 4, 0]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
