//! Explicit decompositions of complete and complete bipartite graphs into
//! Hamiltonian cycles (plus a perfect matching in the even cases), and the
//! colorings built from them.
//!
//! Complete graphs use the classical rotation construction: a zigzag
//! Hamiltonian path on ring vertices closed through a hub, rotated around
//! the ring. Complete bipartite graphs use difference matchings: the edges
//! (a_j, b_{j+d}) for fixed d form a perfect matching, and the union of two
//! matchings with consecutive d is a single Hamiltonian cycle.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::connectivity::is_k_ec_masked;
use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Graph;
use crate::kecss::KecssResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    HamiltonianCycle,
    PerfectMatching,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionPart {
    pub kind: PartKind,
    /// Edge indices, sorted ascending.
    pub edges: Vec<usize>,
}

/// A partition of a graph's edges into labeled Hamiltonian cycles and
/// perfect matchings.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub parts: Vec<DecompositionPart>,
}

impl Decomposition {
    /// Re-checks every invariant: the parts partition E(G), each cycle part
    /// is a single cycle through all n vertices, and each matching part has
    /// n/2 disjoint edges covering V(G).
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.m()];
        for (i, part) in self.parts.iter().enumerate() {
            for &e in &part.edges {
                if e >= g.m() {
                    return Err(Error::InvalidInput(format!(
                        "part {i}: edge {e} out of range"
                    )));
                }
                if used[e] {
                    return Err(Error::InvalidInput(format!("part {i}: edge {e} reused")));
                }
                used[e] = true;
            }
            let mut deg = vec![0usize; g.n()];
            for &e in &part.edges {
                let (u, v) = g.endpoints(e);
                deg[u] += 1;
                deg[v] += 1;
            }
            match part.kind {
                PartKind::HamiltonianCycle => {
                    if part.edges.len() != g.n() || deg.iter().any(|&d| d != 2) {
                        return Err(Error::InvalidInput(format!(
                            "part {i}: not 2-regular spanning"
                        )));
                    }
                    // 2-regular and spanning; a single cycle iff connected
                    let (sub, _) = g.edge_induced_subgraph(&part.edges);
                    if sub.n() != g.n() || !sub.is_connected() {
                        return Err(Error::InvalidInput(format!(
                            "part {i}: not a single spanning cycle"
                        )));
                    }
                }
                PartKind::PerfectMatching => {
                    if part.edges.len() * 2 != g.n() || deg.iter().any(|&d| d != 1) {
                        return Err(Error::InvalidInput(format!(
                            "part {i}: not a perfect matching"
                        )));
                    }
                }
            }
        }
        if used.iter().any(|&u| !u) {
            return Err(Error::InvalidInput("parts do not cover E(G)".into()));
        }
        Ok(())
    }

    /// The coloring with one color per part.
    pub fn to_coloring(&self, g: &Graph) -> EdgeColoring {
        let mut raw = vec![0usize; g.m()];
        for (i, part) in self.parts.iter().enumerate() {
            for &e in &part.edges {
                raw[e] = i;
            }
        }
        EdgeColoring::new(&raw)
    }
}

fn cycle_part(g: &Graph, verts: &[usize]) -> DecompositionPart {
    let mut edges: Vec<usize> = verts
        .iter()
        .zip(verts.iter().cycle().skip(1))
        .map(|(&u, &v)| g.edge_index(u, v).expect("construction edge exists"))
        .collect();
    edges.sort_unstable();
    DecompositionPart {
        kind: PartKind::HamiltonianCycle,
        edges,
    }
}

/// Zigzag order around a ring of `ring` vertices, starting at `start`:
/// start, start+1, start-1, start+2, start-2, ...
fn zigzag(start: usize, ring: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(ring);
    seq.push(start % ring);
    for step in 1..ring {
        let off = step.div_ceil(2);
        let v = if step % 2 == 1 {
            (start + off) % ring
        } else {
            (start + ring - off) % ring
        };
        seq.push(v);
    }
    seq
}

/// K_{2n+1} decomposed into n edge-disjoint Hamiltonian cycles. The hub is
/// vertex 2n; cycle j is the base zigzag rotated by j around the ring 0..2n.
pub fn decompose_complete_odd(n: usize) -> Result<(Graph, Decomposition)> {
    if n < 1 {
        return Err(Error::InvalidInput("need n >= 1".into()));
    }
    let ring = 2 * n;
    let hub = ring;
    let g = generate::complete(2 * n + 1);
    let parts = (0..n)
        .map(|j| {
            let mut verts = vec![hub];
            verts.extend(zigzag(j, ring));
            cycle_part(&g, &verts)
        })
        .collect();
    Ok((g, Decomposition { parts }))
}

/// K_{2n+2} decomposed into n Hamiltonian cycles plus a perfect matching.
/// Here the ring has odd size 2n+1 and the leftover edges after the n
/// rotated cycles form the matching.
pub fn decompose_complete_even(n: usize) -> Result<(Graph, Decomposition)> {
    if n < 1 {
        return Err(Error::InvalidInput("need n >= 1".into()));
    }
    let ring = 2 * n + 1;
    let hub = ring;
    let g = generate::complete(2 * n + 2);
    let mut parts: Vec<DecompositionPart> = (0..n)
        .map(|j| {
            let mut verts = vec![hub];
            verts.extend(zigzag(j, ring));
            cycle_part(&g, &verts)
        })
        .collect();
    let mut used = vec![false; g.m()];
    for part in &parts {
        for &e in &part.edges {
            used[e] = true;
        }
    }
    let leftover: Vec<usize> = (0..g.m()).filter(|&e| !used[e]).collect();
    parts.push(DecompositionPart {
        kind: PartKind::PerfectMatching,
        edges: leftover,
    });
    Ok((g, Decomposition { parts }))
}

/// K_{2n,2n} into n Hamiltonian cycles (`odd = false`), or K_{2n+1,2n+1}
/// into n Hamiltonian cycles plus a perfect matching (`odd = true`).
///
/// With parts a_0..a_{s-1} and b_0..b_{s-1}, difference matching M_d holds
/// the edges (a_j, b_{j+d mod s}); cycle i is M_{2i} ∪ M_{2i+1} walked as
/// a_0, b_{2i}, a_{s-1}, b_{2i-1}, ...
pub fn decompose_bipartite(n: usize, odd: bool) -> Result<(Graph, Decomposition)> {
    if n < 1 {
        return Err(Error::InvalidInput("need n >= 1".into()));
    }
    let s = 2 * n + usize::from(odd);
    let g = generate::complete_bipartite(s, s);
    let b0 = s; // b_j = s + j
    let mut parts = Vec::new();
    for i in 0..n {
        let d0 = 2 * i; // paired with d0 + 1 implicitly by the walk
        let mut verts = Vec::with_capacity(2 * s);
        let mut j = 0usize;
        loop {
            verts.push(j); // a_j
            verts.push(b0 + (j + d0) % s); // M_{d0} edge
                                           // M_{d1} brings us back to a_{j-1}
            j = (j + s - 1) % s;
            if j == 0 {
                break;
            }
        }
        parts.push(cycle_part(&g, &verts));
    }
    if odd {
        let d = 2 * n;
        let mut edges: Vec<usize> = (0..s)
            .map(|j| g.edge_index(j, b0 + (j + d) % s).expect("edge exists"))
            .collect();
        edges.sort_unstable();
        parts.push(DecompositionPart {
            kind: PartKind::PerfectMatching,
            edges,
        });
    }
    Ok((g, Decomposition { parts }))
}

/// The k/2-color MC_k-coloring of K_{k,n} for even k >= 4 and n >= k.
///
/// The k-side is `0..k`, the n-side is `k..k+n`. The first k vertices of the
/// n-side induce a K_{k,k} that splits into k/2 Hamiltonian cycles; each
/// remaining n-side vertex contributes its k edges in pairs (sorted k-side
/// neighbors 2i, 2i+1 go to class i). Every class is a 2-edge-connected
/// spanning subgraph, so the classes jointly give k paths per pair.
pub fn kkn_mc_coloring(k: usize, n: usize) -> Result<(Graph, EdgeColoring)> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "k must be even and >= 4, got {k}"
        )));
    }
    if n < k {
        return Err(Error::InvalidInput(format!(
            "need n >= k, got n={n}, k={k}"
        )));
    }
    let g = generate::complete_bipartite(k, n);
    let a0 = k; // n-side starts here; A_1 = a0..a0+k
    let mut raw = vec![0usize; g.m()];
    // K_{k,k} on the k-side and A_1, via difference matchings over Z_k
    for i in 0..k / 2 {
        for d in [2 * i, 2 * i + 1] {
            for j in 0..k {
                let e = g.edge_index(j, a0 + (j + d) % k).expect("edge exists");
                raw[e] = i;
            }
        }
    }
    // pair off the k edges at each remaining n-side vertex
    for v in (a0 + k)..(a0 + n) {
        for i in 0..k / 2 {
            for b in [2 * i, 2 * i + 1] {
                let e = g.edge_index(b, v).expect("edge exists");
                raw[e] = i;
            }
        }
    }
    Ok((g, EdgeColoring::new(&raw)))
}

/// Colors a k-edge-connected spanning subgraph with one color and every
/// remaining edge with its own fresh color: e(G) - e(H) + 1 colors in total,
/// and a UMC_k-coloring since the single class serves every pair.
pub fn single_class_umc_coloring(g: &Graph, k: usize, h: &KecssResult) -> Result<EdgeColoring> {
    let mut mask = vec![false; g.m()];
    for &e in &h.edges {
        if e >= g.m() {
            return Err(Error::InvalidInput(format!(
                "subgraph edge {e} out of range"
            )));
        }
        mask[e] = true;
    }
    if !is_k_ec_masked(g, Some(&mask), k) {
        return Err(Error::NotKEdgeConnected { k });
    }
    let mut raw = vec![0usize; g.m()];
    let mut next = 1usize;
    for (e, slot) in raw.iter_mut().enumerate() {
        if !mask[e] {
            *slot = next;
            next += 1;
        }
    }
    Ok(EdgeColoring::new(&raw))
}
