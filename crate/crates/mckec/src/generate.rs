//! Deterministic graph families and seeded random instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_k_edge_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// K_n. Edges in lexicographic pair order.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("complete graph is valid")
}

/// K_{a,b} with parts `0..a` and `a..a+b`. Edges ordered by (left, right).
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, edges).expect("complete bipartite graph is valid")
}

/// C_n with edges (0,1), (1,2), ..., (n-1,0). Requires n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, edges)
}

/// One piece of a cactus: a cycle of `len >= 3` new-vertex hops hung on an
/// existing vertex, or a pendant bridge edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CactusPart {
    Cycle { attach: usize, len: usize },
    Bridge { attach: usize },
}

/// Builds a cactus by gluing edge-disjoint cycles (and optional bridges) at
/// shared vertices. The first part must attach at vertex 0 of a fresh
/// single-vertex graph; later parts attach at any existing vertex.
pub fn cactus(spec: &[CactusPart]) -> Result<Graph> {
    let mut n = 1usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, part) in spec.iter().enumerate() {
        match *part {
            CactusPart::Cycle { attach, len } => {
                if len < 3 {
                    return Err(Error::InvalidInput(format!(
                        "cactus part {i}: cycle length {len} < 3"
                    )));
                }
                if attach >= n {
                    return Err(Error::InvalidInput(format!(
                        "cactus part {i}: attach vertex {attach} does not exist yet"
                    )));
                }
                // len - 1 fresh vertices n, n+1, ..., closing back at attach
                let first = n;
                let mut prev = attach;
                for _ in 0..(len - 1) {
                    edges.push((prev, n));
                    prev = n;
                    n += 1;
                }
                edges.push((prev, attach));
                debug_assert_eq!(prev, first + len - 2);
            }
            CactusPart::Bridge { attach } => {
                if attach >= n {
                    return Err(Error::InvalidInput(format!(
                        "cactus part {i}: attach vertex {attach} does not exist yet"
                    )));
                }
                edges.push((attach, n));
                n += 1;
            }
        }
    }
    Graph::new(n, edges)
}

/// Seeded Erdős–Rényi sampling, rejected until the sample is k-edge-connected.
/// Edge probability is `min(1, (k+2)·ln(n)/n)`. Deterministic in `(n, k, seed)`.
pub fn random_kec(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n < 2 || k == 0 || k > n - 1 {
        return Err(Error::InvalidInput(format!(
            "random_kec needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let p = (((k + 2) as f64) * (n as f64).ln() / n as f64).min(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if is_k_edge_connected(&g, k) {
            return Ok(g);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "random_kec(n={n}, k={k}, seed={seed}) found no sample in 100000 attempts"
    )))
}

/// A seeded connected graph: G(n, p) resampled until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "random_connected(n={n}, p={p}, seed={seed}) found no sample"
    )))
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen graph is valid")
}

/// All 2^C(n,2) labeled graphs on `n` vertices, in edge-mask order.
/// Intended for exhaustive desk-scale corpora (n <= 6 or so).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(n, edges).expect("mask subgraph is valid")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        assert_eq!(cycle(6).unwrap().m(), 6);
        assert!(cycle(2).is_err());
        assert_eq!(petersen().m(), 15);
    }

    #[test]
    fn two_squares_sharing_a_vertex() {
        let g = cactus(&[
            CactusPart::Cycle { attach: 0, len: 4 },
            CactusPart::Cycle { attach: 0, len: 4 },
        ])
        .unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.m(), 8);
        // no cut edges: every edge lies on its cycle
        assert!(is_k_edge_connected(&g, 1));
        let bs = crate::graph::blocks(&g).unwrap();
        assert!(bs.iter().all(|b| b.len() == 4));
    }

    #[test]
    fn cactus_with_bridge_has_a_cut_edge() {
        let g = cactus(&[
            CactusPart::Cycle { attach: 0, len: 3 },
            CactusPart::Bridge { attach: 1 },
        ])
        .unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(!is_k_edge_connected(&g, 2));
        assert!(cactus(&[CactusPart::Cycle { attach: 3, len: 3 }]).is_err());
    }

    #[test]
    fn random_kec_is_deterministic_and_connected_enough() {
        let a = random_kec(8, 2, 42).unwrap();
        let b = random_kec(8, 2, 42).unwrap();
        assert_eq!(a, b);
        assert!(connectivity::is_k_edge_connected(&a, 2));
        let c = random_kec(8, 2, 43).unwrap();
        assert!(connectivity::is_k_edge_connected(&c, 2));

        assert!(random_kec(5, 5, 0).is_err());
    }

    #[test]
    fn all_graphs_counts() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
        let connected = all_graphs(4).filter(|g| g.is_connected()).count();
        assert_eq!(connected, 38); // labeled connected graphs on 4 vertices
    }
}
