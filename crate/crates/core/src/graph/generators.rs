use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{girth, Girth, Graph, GraphError, Vertex};

/// Graph families that can be built from a handful of parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    /// P_n.
    Path(usize),
    /// C_n, `n >= 3`.
    Cycle(usize),
    /// The star on `n` vertices, K_{1,n-1}. Vertex 0 is the centre.
    Star(usize),
    /// K_{r,s}; the r-side is `0..r`.
    CompleteBipartite(usize, usize),
    /// Double star T_{r,s}: centres 0 and 1, then r leaves on 0 and s on 1.
    DoubleStar(usize, usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    /// The (4,5)-cage on 19 vertices.
    Robertson,
    /// Two adjacent hubs, each carrying three paths of length two.
    Fig3Spider,
    /// `m` distinct edges drawn uniformly from a ChaCha8 stream seeded by `seed`.
    RandomGnm {
        n: usize,
        m: usize,
        seed: u64,
    },
    /// The complement of K_n.
    Edgeless(usize),
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters(msg.into())
}

fn at_least_one(name: &str, v: usize) -> Result<(), GraphError> {
    if v == 0 {
        Err(bad(format!("{name} must be >= 1")))
    } else {
        Ok(())
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match *spec {
        FamilySpec::Path(n) => {
            at_least_one("path order", n)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle order must be >= 3"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Star(n) => {
            at_least_one("star order", n)?;
            Graph::from_edges(n, (1..n).map(|i| (0, i)))
        }
        FamilySpec::CompleteBipartite(r, s) => {
            at_least_one("r", r)?;
            at_least_one("s", s)?;
            Ok(Graph::empty(r).join(&Graph::empty(s)))
        }
        FamilySpec::DoubleStar(r, s) => {
            at_least_one("r", r)?;
            at_least_one("s", s)?;
            let mut edges = vec![(0, 1)];
            edges.extend((0..r).map(|i| (0, 2 + i)));
            edges.extend((0..s).map(|i| (1, 2 + r + i)));
            Graph::from_edges(r + s + 2, edges)
        }
        FamilySpec::Join(ref a, ref b) => Ok(generate(a)?.join(&generate(b)?)),
        FamilySpec::Robertson => robertson(),
        FamilySpec::Fig3Spider => {
            // 0, 1: hubs; 2..8: midpoints (three per hub); 8..14: leaves.
            let mut edges = vec![(0, 1)];
            for i in 0..6 {
                let mid = 2 + i;
                edges.push((if i < 3 { 0 } else { 1 }, mid));
                edges.push((mid, 8 + i));
            }
            Graph::from_edges(14, edges)
        }
        FamilySpec::RandomGnm { n, m, seed } => random_gnm(n, m, seed),
        FamilySpec::Edgeless(n) => {
            at_least_one("order", n)?;
            Ok(Graph::empty(n))
        }
    }
}

fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    at_least_one("order", n)?;
    let pairs = n * (n - 1) / 2;
    if m > pairs {
        return Err(bad(format!("m = {m} exceeds n(n-1)/2 = {pairs}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = index::sample(&mut rng, pairs, m).into_vec();
    picked.sort_unstable();
    Graph::from_edges(n, picked.into_iter().map(|k| unrank_pair(n, k)))
}

/// Maps `k` in `0..n(n-1)/2` to the k-th pair `(u, v)`, `u < v`, in
/// lexicographic order.
fn unrank_pair(n: usize, mut k: usize) -> (Vertex, Vertex) {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if k < row {
            return (u, u + 1 + k);
        }
        k -= row;
        u += 1;
    }
}

// Hamiltonian cycle 0..19 plus the chords i -> i + JUMP[i] (mod 19).
const ROBERTSON_JUMPS: [usize; 19] = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4];

fn robertson() -> Result<Graph, GraphError> {
    let n = ROBERTSON_JUMPS.len();
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + ROBERTSON_JUMPS[i]) % n)]);
    let g = Graph::from_edges(n, edges)?;
    if g.n() != 19 || g.m() != 38 {
        return Err(GraphError::Validation(format!(
            "Robertson graph has n={}, m={}",
            g.n(),
            g.m()
        )));
    }
    if g.min_degree() != 4 || g.max_degree() != 4 {
        return Err(GraphError::Validation("Robertson graph is not 4-regular".into()));
    }
    if girth(&g) != Girth::Finite(5) {
        return Err(GraphError::Validation("Robertson graph girth is not 5".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_eleven() {
        let g = generate(&FamilySpec::Star(11)).unwrap();
        assert_eq!((g.n(), g.max_degree(), g.m()), (11, 10, 10));
    }

    #[test]
    fn robertson_shape() {
        let g = generate(&FamilySpec::Robertson).unwrap();
        assert_eq!((g.n(), g.min_degree(), g.max_degree()), (19, 4, 4));
        assert_eq!(girth(&g), Girth::Finite(5));
    }

    #[test]
    fn fig3_shape() {
        let g = generate(&FamilySpec::Fig3Spider).unwrap();
        assert_eq!((g.n(), g.m(), g.max_degree()), (14, 13, 4));
        let leaves = (0..14).filter(|&v| g.degree(v) == 1).count();
        let mids = (0..14).filter(|&v| g.degree(v) == 2).count();
        assert_eq!((leaves, mids), (6, 6));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn bipartite_and_double_star_counts() {
        for r in 1..5 {
            for s in 1..5 {
                let k = generate(&FamilySpec::CompleteBipartite(r, s)).unwrap();
                assert_eq!(k.m(), r * s);
                let t = generate(&FamilySpec::DoubleStar(r, s)).unwrap();
                assert_eq!(t.n(), r + s + 2);
                assert_eq!((0..t.n()).filter(|&v| t.degree(v) > 1).count(), 2);
            }
        }
    }

    #[test]
    fn join_spec() {
        let spec = FamilySpec::Join(Box::new(FamilySpec::Edgeless(2)), Box::new(FamilySpec::Edgeless(3)));
        assert_eq!(
            generate(&spec).unwrap(),
            generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap()
        );
    }

    #[test]
    fn gnm_is_deterministic() {
        let spec = FamilySpec::RandomGnm { n: 12, m: 20, seed: 99 };
        let a = generate(&spec).unwrap();
        assert_eq!(a.m(), 20);
        assert_eq!(a, generate(&spec).unwrap());
        let other = generate(&FamilySpec::RandomGnm {
            n: 12,
            m: 20,
            seed: 100,
        })
        .unwrap();
        assert_ne!(a, other);
        assert!(generate(&FamilySpec::RandomGnm { n: 4, m: 7, seed: 0 }).is_err());
    }

    #[test]
    fn unrank_pair_covers_all_pairs() {
        let n = 7;
        let got: Vec<_> = (0..n * (n - 1) / 2).map(|k| unrank_pair(n, k)).collect();
        let want: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::Path(0)).is_err());
        assert!(generate(&FamilySpec::DoubleStar(0, 3)).is_err());
    }
}
