//! Minimum and minimal k-edge-connected spanning subgraphs.
//!
//! `minimalize` strips deletable edges greedily; `minimum_kecss` finds a true
//! minimum by branch and bound over edge subsets. Exactness is recorded in
//! the result because downstream formula checks are only meaningful against
//! the true minimum.

use serde::Serialize;

use crate::connectivity::{self, is_k_ec_masked};
use crate::error::{Error, Result};
use crate::graph::{CutCertificate, Graph};

/// Whether a spanning-subgraph result is a proven minimum or merely minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    HeuristicMinimal,
}

/// A k-edge-connected spanning subgraph, as a set of edge indices of the
/// host graph.
#[derive(Debug, Clone, Serialize)]
pub struct KecssResult {
    /// Edge indices, sorted ascending.
    pub edges: Vec<usize>,
    pub size: usize,
    pub k: usize,
    pub exactness: Exactness,
    /// Edge connectivity of the subgraph, always >= k.
    pub connectivity: usize,
}

impl KecssResult {
    fn new(g: &Graph, mut edges: Vec<usize>, k: usize, exactness: Exactness) -> Self {
        edges.sort_unstable();
        let keep = mask_of(g.m(), &edges);
        let sub = g.spanning_subgraph(&keep);
        let connectivity = connectivity::edge_connectivity(&sub);
        debug_assert!(connectivity >= k);
        KecssResult {
            size: edges.len(),
            edges,
            k,
            exactness,
            connectivity,
        }
    }

    /// Re-checks that the edge set spans V(G) and is k-edge-connected.
    pub fn validate(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&e| e < g.m())
            && self.size == self.edges.len()
            && is_k_ec_masked(g, Some(&mask_of(g.m(), &self.edges)), self.k)
    }
}

fn mask_of(m: usize, edges: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; m];
    for &e in edges {
        mask[e] = true;
    }
    mask
}

fn require_kec(g: &Graph, k: usize) -> Result<()> {
    if !connectivity::is_k_edge_connected(g, k) {
        return Err(Error::NotKEdgeConnected { k });
    }
    Ok(())
}

/// Is `g` minus edge `e` still k-edge-connected? Requires `g` itself to be
/// k-edge-connected.
pub fn is_deletable(g: &Graph, e: usize, k: usize) -> Result<bool> {
    require_kec(g, k)?;
    if e >= g.m() {
        return Err(Error::InvalidInput(format!("edge {e} out of range")));
    }
    let mut mask = vec![true; g.m()];
    mask[e] = false;
    Ok(is_k_ec_masked(g, Some(&mask), k))
}

/// Greedily deletes deletable edges, lowest edge index first, until none
/// remains. The result is a minimally k-edge-connected spanning subgraph.
///
/// A single ascending sweep suffices: deleting an edge never makes a
/// previously undeletable edge deletable.
pub fn minimalize(g: &Graph, k: usize) -> Result<KecssResult> {
    require_kec(g, k)?;
    let mut mask = vec![true; g.m()];
    for e in 0..g.m() {
        mask[e] = false;
        if !is_k_ec_masked(g, Some(&mask), k) {
            mask[e] = true;
        }
    }
    let edges: Vec<usize> = (0..g.m()).filter(|&e| mask[e]).collect();
    Ok(KecssResult::new(g, edges, k, Exactness::HeuristicMinimal))
}

/// Search budget for the exact solver: it refuses graphs with more edges.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct KecssBudget {
    pub max_edges: usize,
}

impl Default for KecssBudget {
    fn default() -> Self {
        KecssBudget { max_edges: 20 }
    }
}

/// Exact minimum k-edge-connected spanning subgraph by branch and bound over
/// edge subsets. Among minimum subgraphs, returns the lexicographically
/// smallest edge-index set.
///
/// Branch order: edges ascending by (endpoint degree sum, index), include
/// branch before exclude branch. Pruning is by vertex-degree demands plus the
/// incumbent; full k-edge-connectivity is only verified on candidate sets.
pub fn minimum_kecss(g: &Graph, k: usize, budget: KecssBudget) -> Result<KecssResult> {
    require_kec(g, k)?;
    if g.m() > budget.max_edges {
        return Err(Error::BudgetExceeded(format!(
            "minimum_kecss: m = {} exceeds budget {}",
            g.m(),
            budget.max_edges
        )));
    }

    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (g.degree(u) + g.degree(v), e)
    });

    // seed the incumbent with the greedy minimal subgraph
    let seed = minimalize(g, k)?;
    let mut best: (usize, Vec<usize>) = (seed.size, seed.edges);

    let mut state = Search {
        g,
        k,
        order,
        chosen: vec![false; g.m()],
        chosen_count: 0,
        chosen_deg: vec![0; g.n()],
        avail_deg: (0..g.n()).map(|v| g.degree(v)).collect(),
        best: &mut best,
    };
    state.dfs(0);

    let (_, edges) = best;
    Ok(KecssResult::new(g, edges, k, Exactness::Exact))
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    chosen: Vec<bool>,
    chosen_count: usize,
    chosen_deg: Vec<usize>,
    /// chosen degree + undecided degree, per vertex
    avail_deg: Vec<usize>,
    best: &'a mut (usize, Vec<usize>),
}

impl Search<'_> {
    /// Full feasibility check of the chosen set; updates the incumbent when
    /// the set is feasible and (size, lex) better. Returns feasibility.
    fn candidate(&mut self) -> bool {
        if !is_k_ec_masked(self.g, Some(&self.chosen), self.k) {
            return false;
        }
        let size = self.chosen_count;
        if size < self.best.0 {
            self.best.0 = size;
            self.best.1 = (0..self.g.m()).filter(|&e| self.chosen[e]).collect();
        } else if size == self.best.0 {
            let set: Vec<usize> = (0..self.g.m()).filter(|&e| self.chosen[e]).collect();
            if set < self.best.1 {
                self.best.1 = set;
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize) {
        // every vertex must still be able to reach degree k
        if self.avail_deg.iter().any(|&d| d < self.k) {
            return;
        }
        // lower bound: each missing degree unit needs half an edge
        let deficit: usize = self
            .chosen_deg
            .iter()
            .map(|&d| self.k.saturating_sub(d))
            .sum();
        let lower = self.chosen_count + deficit.div_ceil(2);
        if lower > self.best.0 {
            return;
        }
        // once the chosen set alone is feasible, every completion of this
        // subtree is a strict superset and therefore strictly larger
        if self.chosen_deg.iter().all(|&d| d >= self.k) && self.candidate() {
            return;
        }
        if depth == self.order.len() {
            return;
        }
        let e = self.order[depth];
        let (u, v) = self.g.endpoints(e);

        // include branch
        self.chosen[e] = true;
        self.chosen_count += 1;
        self.chosen_deg[u] += 1;
        self.chosen_deg[v] += 1;
        self.dfs(depth + 1);
        self.chosen[e] = false;
        self.chosen_count -= 1;
        self.chosen_deg[u] -= 1;
        self.chosen_deg[v] -= 1;

        // exclude branch
        self.avail_deg[u] -= 1;
        self.avail_deg[v] -= 1;
        self.dfs(depth + 1);
        self.avail_deg[u] += 1;
        self.avail_deg[v] += 1;
    }
}

/// Which minimality property failed (only possible through an implementation
/// bug; minimally k-edge-connected graphs provably satisfy all three).
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MaderViolation {
    EdgeBound { m: usize, limit: usize },
    NoDegreeKVertex,
    EdgeWithoutKCut { edge: usize, lambda: usize },
}

/// Minimality report: whether `g` is minimally k-edge-connected, and when it
/// is, the three certified properties of minimal graphs — the edge bound
/// e <= k(n-1), a degree-k vertex, and a k-edge cut through every edge.
#[derive(Debug, Clone, Serialize)]
pub struct MaderReport {
    pub k: usize,
    pub is_minimal: bool,
    /// e(G) <= k(n-1); only asserted when minimal.
    pub edge_bound_holds: bool,
    pub degree_k_vertex: Option<usize>,
    /// For each edge index, a containing k-edge cut (empty unless minimal).
    pub edge_cuts: Vec<CutCertificate>,
    pub first_violation: Option<MaderViolation>,
}

/// Checks minimality and, when minimal, all three minimality properties.
/// The cut through edge (u,v) is found as a minimum u-v cut: any u-v cut
/// contains the edge uv itself, and in a minimal graph its size is exactly k.
pub fn mader_checks(g: &Graph, k: usize) -> Result<MaderReport> {
    require_kec(g, k)?;
    let mut mask = vec![true; g.m()];
    let mut is_minimal = true;
    for e in 0..g.m() {
        mask[e] = false;
        if is_k_ec_masked(g, Some(&mask), k) {
            is_minimal = false;
            mask[e] = true;
            break;
        }
        mask[e] = true;
    }

    if !is_minimal {
        return Ok(MaderReport {
            k,
            is_minimal,
            edge_bound_holds: g.m() <= k * (g.n() - 1),
            degree_k_vertex: None,
            edge_cuts: Vec::new(),
            first_violation: None,
        });
    }

    let mut first_violation = None;
    let edge_bound_holds = g.m() <= k * (g.n() - 1);
    if !edge_bound_holds {
        first_violation = Some(MaderViolation::EdgeBound {
            m: g.m(),
            limit: k * (g.n() - 1),
        });
    }
    let degree_k_vertex = (0..g.n()).find(|&v| g.degree(v) == k);
    if degree_k_vertex.is_none() && first_violation.is_none() {
        first_violation = Some(MaderViolation::NoDegreeKVertex);
    }
    let mut edge_cuts = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        let (lambda, cut) = connectivity::local_edge_connectivity_certified(g, u, v)?;
        if lambda != k && first_violation.is_none() {
            first_violation = Some(MaderViolation::EdgeWithoutKCut { edge: e, lambda });
        }
        edge_cuts.push(cut);
    }
    Ok(MaderReport {
        k,
        is_minimal,
        edge_bound_holds,
        degree_k_vertex,
        edge_cuts,
        first_violation,
    })
}
