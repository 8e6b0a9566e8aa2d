//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately independent of the library's algorithmic shortcuts: paths are
//! enumerated one by one, partitions exhaustively, subsets in (size, lex)
//! order.
//!
//! Not every suite uses every oracle.
#![allow(dead_code)]

use mckec::coloring::EdgeColoring;
use mckec::connectivity::is_k_edge_connected;
use mckec::graph::Graph;
use mckec::partitions::for_each_partition;

/// All simple u-v paths as edge bitmasks (m <= 32).
pub fn all_paths(g: &Graph, u: usize, v: usize) -> Vec<u32> {
    assert!(g.m() <= 32);
    let mut out = Vec::new();
    let mut visited = vec![false; g.n()];
    visited[u] = true;
    fn dfs(
        g: &Graph,
        at: usize,
        target: usize,
        mask: u32,
        visited: &mut [bool],
        out: &mut Vec<u32>,
    ) {
        if at == target {
            out.push(mask);
            return;
        }
        for &(w, e) in g.neighbors(at) {
            if !visited[w] {
                visited[w] = true;
                dfs(g, w, target, mask | (1 << e), visited, out);
                visited[w] = false;
            }
        }
    }
    dfs(g, u, v, 0, &mut visited, &mut out);
    out
}

/// Size of a maximum pairwise edge-disjoint subfamily of `paths`.
pub fn max_disjoint(paths: &[u32]) -> usize {
    fn rec(paths: &[u32], idx: usize, used: u32) -> usize {
        if idx == paths.len() {
            return 0;
        }
        let skip = rec(paths, idx + 1, used);
        if paths[idx] & used == 0 {
            skip.max(1 + rec(paths, idx + 1, used | paths[idx]))
        } else {
            skip
        }
    }
    rec(paths, 0, 0)
}

/// Exhaustive local edge connectivity: the largest set of pairwise
/// edge-disjoint u-v paths, found over the explicit path list.
pub fn lambda_by_paths(g: &Graph, u: usize, v: usize) -> usize {
    max_disjoint(&all_paths(g, u, v))
}

/// Exhaustive monochromatic path-family maximum: paths of any single color,
/// pairwise edge-disjoint across the whole family.
pub fn monochromatic_max_by_paths(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> usize {
    let paths: Vec<u32> = all_paths(g, u, v)
        .into_iter()
        .filter(|&mask| {
            let colors: Vec<usize> = (0..g.m())
                .filter(|&e| mask >> e & 1 == 1)
                .map(|e| c.color_of(e))
                .collect();
            colors.windows(2).all(|w| w[0] == w[1])
        })
        .collect();
    max_disjoint(&paths)
}

/// Slow mc_k / umc_k over ALL set partitions of the edge set, connected or
/// not, using the library verifier as the feasibility test.
pub fn max_colors_all_partitions(g: &Graph, k: usize, umc: bool) -> usize {
    let mut best = 0usize;
    for_each_partition(g.m(), |rgs, nblocks| {
        if nblocks <= best {
            return;
        }
        let c = EdgeColoring::new(rgs);
        let pass = if umc {
            mckec::coloring::is_umc_k(g, &c, k).unwrap().pass
        } else {
            mckec::coloring::is_mc_k(g, &c, k).unwrap().pass
        };
        if pass {
            best = nblocks;
        }
    });
    best
}

/// First k-edge-connected spanning edge subset in (size, lexicographic)
/// order, by plain enumeration.
pub fn min_kecss_by_enumeration(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let m = g.m();
    for size in 0..=m {
        let mut chosen: Vec<usize> = Vec::with_capacity(size);
        if let Some(found) = combos(g, k, size, 0, &mut chosen) {
            return Some(found);
        }
    }
    None
}

fn combos(
    g: &Graph,
    k: usize,
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == size {
        let mut keep = vec![false; g.m()];
        for &e in chosen.iter() {
            keep[e] = true;
        }
        let sub = g.spanning_subgraph(&keep);
        if is_k_edge_connected(&sub, k) {
            return Some(chosen.clone());
        }
        return None;
    }
    if g.m() - from < size - chosen.len() {
        return None;
    }
    for e in from..g.m() {
        chosen.push(e);
        if let Some(found) = combos(g, k, size, e + 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// All labeled graphs on exactly `n` vertices that are k-edge-connected.
pub fn all_kec_graphs(n: usize, k: usize) -> Vec<Graph> {
    mckec::generate::all_graphs(n)
        .filter(|g| is_k_edge_connected(g, k))
        .collect()
}

/// The k-edge-connected corpus on 1..=n_max vertices, in enumeration order.
pub fn kec_corpus_up_to(n_max: usize, k: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(|n| all_kec_graphs(n, k)).collect()
}
