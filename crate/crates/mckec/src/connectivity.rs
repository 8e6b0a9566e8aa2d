//! Edge connectivity via unit-capacity max flow.
//!
//! An undirected edge {u,v} becomes the arc pair u->v / v->u, each with
//! capacity 1 and each the other's reverse; pushing along one direction
//! raises the residual of the other. The max-flow value then equals the
//! maximum number of pairwise edge-disjoint undirected paths, and the
//! residual-reachable side yields a minimum cut of the same size.
//!
//! Determinism: adjacency is laid out in edge-index order and augmenting
//! paths are found by BFS, so the flow and the certificate are functions of
//! the input alone.

use crate::error::{Error, Result};
use crate::graph::{CutCertificate, Graph};

/// Residual network scratch space, reusable across s-t queries on the same
/// (graph, edge mask) pair.
pub(crate) struct FlowNet {
    n: usize,
    /// arc 2t / 2t+1 are the two directions of enabled edge t
    arc_to: Vec<u32>,
    arc_edge: Vec<u32>, // original edge index of each arc
    head: Vec<Vec<u32>>,
    residual: Vec<u8>,
    parent: Vec<u32>, // parent arc per vertex during BFS
    queue: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl FlowNet {
    /// Builds the network over the edges of `g` enabled by `mask`
    /// (all edges when `mask` is `None`).
    pub(crate) fn build(g: &Graph, mask: Option<&[bool]>) -> Self {
        let n = g.n();
        let mut arc_to = Vec::new();
        let mut arc_edge = Vec::new();
        let mut head = vec![Vec::new(); n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if let Some(m) = mask {
                if !m[e] {
                    continue;
                }
            }
            let a = arc_to.len() as u32;
            arc_to.push(v as u32);
            arc_to.push(u as u32);
            arc_edge.push(e as u32);
            arc_edge.push(e as u32);
            head[u].push(a);
            head[v].push(a + 1);
        }
        let narcs = arc_to.len();
        FlowNet {
            n,
            arc_to,
            arc_edge,
            head,
            residual: vec![1; narcs],
            parent: vec![NONE; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn reset(&mut self) {
        self.residual.fill(1);
    }

    /// One BFS from `s`; returns true when `t` was reached, leaving the
    /// parent-arc trace in `self.parent`.
    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.parent.fill(NONE);
        self.queue.clear();
        self.queue.push(s as u32);
        // s's parent marks it visited; use a self-loop sentinel
        self.parent[s] = u32::MAX - 1;
        let mut qi = 0;
        while qi < self.queue.len() {
            let v = self.queue[qi] as usize;
            qi += 1;
            for &a in &self.head[v] {
                let w = self.arc_to[a as usize] as usize;
                if self.parent[w] == NONE && self.residual[a as usize] > 0 {
                    self.parent[w] = a;
                    if w == t {
                        return true;
                    }
                    self.queue.push(w as u32);
                }
            }
        }
        false
    }

    /// Max flow (= max edge-disjoint path count) between `s` and `t`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> usize {
        self.reset();
        let mut flow = 0;
        while self.bfs(s, t) {
            let mut v = t;
            while v != s {
                let a = self.parent[v] as usize;
                self.residual[a] -= 1;
                self.residual[a ^ 1] += 1;
                v = self.arc_to[a ^ 1] as usize;
            }
            flow += 1;
        }
        flow
    }

    /// Runs after `max_flow(s, t)`: the residual-reachable side of `s` and
    /// the enabled edges crossing it.
    fn min_cut_from(&mut self, s: usize) -> CutCertificate {
        let mut in_side = vec![false; self.n];
        self.queue.clear();
        self.queue.push(s as u32);
        in_side[s] = true;
        let mut qi = 0;
        while qi < self.queue.len() {
            let v = self.queue[qi] as usize;
            qi += 1;
            for &a in &self.head[v] {
                let w = self.arc_to[a as usize] as usize;
                if !in_side[w] && self.residual[a as usize] > 0 {
                    in_side[w] = true;
                    self.queue.push(w as u32);
                }
            }
        }
        let mut cut_edges: Vec<usize> = (0..self.arc_to.len())
            .step_by(2)
            .filter(|&a| {
                let u = self.arc_to[a + 1] as usize;
                let v = self.arc_to[a] as usize;
                in_side[u] != in_side[v]
            })
            .map(|a| self.arc_edge[a] as usize)
            .collect();
        cut_edges.sort_unstable();
        CutCertificate {
            side: (0..self.n).filter(|&v| in_side[v]).collect(),
            cut_edges,
        }
    }
}

/// Maximum number of pairwise edge-disjoint u-v paths in the subgraph given
/// by `mask` (whole graph when `None`).
pub(crate) fn lambda_masked(g: &Graph, mask: Option<&[bool]>, u: usize, v: usize) -> usize {
    FlowNet::build(g, mask).max_flow(u, v)
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u == v {
        return Err(Error::InvalidInput(format!("u = v = {u}")));
    }
    if u >= g.n() || v >= g.n() {
        return Err(Error::InvalidInput(format!(
            "vertex out of range: ({u},{v}) with n = {}",
            g.n()
        )));
    }
    Ok(())
}

/// Maximum number of pairwise edge-disjoint u-v paths.
pub fn local_edge_connectivity(g: &Graph, u: usize, v: usize) -> Result<usize> {
    check_pair(g, u, v)?;
    Ok(lambda_masked(g, None, u, v))
}

/// As [`local_edge_connectivity`], plus a u-v cut of exactly that size.
pub fn local_edge_connectivity_certified(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<(usize, CutCertificate)> {
    check_pair(g, u, v)?;
    let mut net = FlowNet::build(g, None);
    let flow = net.max_flow(u, v);
    let cut = net.min_cut_from(u);
    debug_assert_eq!(cut.cut_edges.len(), flow);
    Ok((flow, cut))
}

/// A k-edge-connectivity verdict with a violating cut when one exists.
#[derive(Debug, Clone)]
pub struct KecCheck {
    pub holds: bool,
    /// On failure, a cut of size < k. `None` only when `n < 2`, where no
    /// nonempty proper vertex side exists.
    pub certificate: Option<CutCertificate>,
}

/// True iff `n >= 2`, the graph is connected, and every vertex pair has at
/// least `k` edge-disjoint paths. `k = 0` reduces to a connectivity test.
pub fn is_k_edge_connected(g: &Graph, k: usize) -> bool {
    is_k_ec_masked(g, None, k)
}

/// Masked variant: connectivity of the spanning subgraph on all of V(G)
/// keeping only the enabled edges.
pub(crate) fn is_k_ec_masked(g: &Graph, mask: Option<&[bool]>, k: usize) -> bool {
    let n = g.n();
    if n < 2 {
        return false;
    }
    // connectivity over all n vertices
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(w, e) in g.neighbors(v) {
            if let Some(m) = mask {
                if !m[e] {
                    continue;
                }
            }
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n {
        return false;
    }
    if k == 0 {
        return true;
    }
    // min degree is a cheap necessary bound
    let mut deg = vec![0usize; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if mask.is_none_or(|m| m[e]) {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    if deg.iter().any(|&d| d < k) {
        return false;
    }
    // global edge connectivity = min over v != 0 of lambda(0, v)
    let mut net = FlowNet::build(g, mask);
    (1..n).all(|v| net.max_flow(0, v) >= k)
}

/// As [`is_k_edge_connected`], returning a violating cut on failure.
pub fn is_k_edge_connected_certified(g: &Graph, k: usize) -> KecCheck {
    let n = g.n();
    if n < 2 {
        return KecCheck {
            holds: false,
            certificate: None,
        };
    }
    if !g.is_connected() {
        let side = g.component_of(0);
        return KecCheck {
            holds: false,
            certificate: Some(CutCertificate {
                side,
                cut_edges: Vec::new(),
            }),
        };
    }
    if k == 0 {
        return KecCheck {
            holds: true,
            certificate: None,
        };
    }
    let mut net = FlowNet::build(g, None);
    let mut worst: Option<(usize, usize)> = None; // (lambda, partner)
    for v in 1..n {
        let f = net.max_flow(0, v);
        if worst.is_none_or(|(best, _)| f < best) {
            worst = Some((f, v));
        }
    }
    let (lambda, v) = worst.expect("n >= 2");
    if lambda >= k {
        return KecCheck {
            holds: true,
            certificate: None,
        };
    }
    net.max_flow(0, v);
    let cut = net.min_cut_from(0);
    debug_assert_eq!(cut.cut_edges.len(), lambda);
    KecCheck {
        holds: false,
        certificate: Some(cut),
    }
}

/// Global edge connectivity (0 for disconnected or trivial graphs).
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut net = FlowNet::build(g, None);
    (1..n).map(|v| net.max_flow(0, v)).min().expect("n >= 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Graph;

    #[test]
    fn complete_graph_pairs() {
        let k4 = generate::complete(4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                assert_eq!(local_edge_connectivity(&k4, u, v).unwrap(), 3);
            }
        }
    }

    #[test]
    fn cycle_and_path_pairs() {
        let c5 = generate::cycle(5).unwrap();
        assert_eq!(local_edge_connectivity(&c5, 0, 2).unwrap(), 2);

        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(local_edge_connectivity(&p3, 0, 2).unwrap(), 1);
    }

    #[test]
    fn rejects_equal_endpoints() {
        let k4 = generate::complete(4);
        assert!(local_edge_connectivity(&k4, 1, 1).is_err());
    }

    #[test]
    fn certificates_match_values() {
        let c5 = generate::cycle(5).unwrap();
        let (f, cut) = local_edge_connectivity_certified(&c5, 0, 3).unwrap();
        assert_eq!(f, 2);
        assert_eq!(cut.cut_edges.len(), 2);
        assert!(cut.validate(&c5));
        assert!(cut.side.contains(&0) && !cut.side.contains(&3));
    }

    #[test]
    fn k_edge_connectivity_examples() {
        let c4 = generate::cycle(4).unwrap();
        assert!(is_k_edge_connected(&c4, 2));
        let check = is_k_edge_connected_certified(&c4, 3);
        assert!(!check.holds);
        let cert = check.certificate.unwrap();
        assert_eq!(cert.cut_edges.len(), 2);
        assert!(cert.validate(&c4));

        assert!(is_k_edge_connected(&generate::complete(5), 4));
    }

    #[test]
    fn trivial_and_disconnected_inputs() {
        let k1 = Graph::new(1, vec![]).unwrap();
        assert!(!is_k_edge_connected(&k1, 1));
        assert!(is_k_edge_connected_certified(&k1, 1).certificate.is_none());

        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let check = is_k_edge_connected_certified(&g, 1);
        assert!(!check.holds);
        let cert = check.certificate.unwrap();
        assert!(cert.cut_edges.is_empty());
        assert_eq!(cert.side, vec![0, 1]);
    }

    #[test]
    fn global_connectivity_values() {
        assert_eq!(edge_connectivity(&generate::complete(5)), 4);
        assert_eq!(edge_connectivity(&generate::cycle(6).unwrap()), 2);
        assert_eq!(edge_connectivity(&generate::petersen()), 3);
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_connectivity(&p3), 1);
    }

    #[test]
    fn masked_connectivity_respects_the_mask() {
        let k4 = generate::complete(4);
        // keep only the 4-cycle 0-1-3-2-0: edges (0,1),(1,3),(2,3),(0,2)
        let mut mask = vec![false; 6];
        for (u, v) in [(0, 1), (1, 3), (2, 3), (0, 2)] {
            mask[k4.edge_index(u, v).unwrap()] = true;
        }
        assert!(is_k_ec_masked(&k4, Some(&mask), 2));
        assert!(!is_k_ec_masked(&k4, Some(&mask), 3));
        assert_eq!(lambda_masked(&k4, Some(&mask), 0, 3), 2);
    }
}
