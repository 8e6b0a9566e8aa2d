//! Edge-disjoint spanning trees and the partition ratio ψ.
//!
//! Two independent routes to the same number: `tree_packing_number` packs
//! trees constructively by matroid-union augmentation, while `psi_oracle`
//! minimizes cross-edges/(blocks-1) over all vertex partitions. The packing
//! number equals ⌊ψ⌋, and the test suite holds the two routes against each
//! other.

use num_rational::Ratio;
use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};
use crate::partitions;

/// Pairwise edge-disjoint spanning trees, each an edge-index set.
#[derive(Debug, Clone, Serialize)]
pub struct TreePacking {
    pub trees: Vec<Vec<usize>>,
}

impl TreePacking {
    pub fn k(&self) -> usize {
        self.trees.len()
    }

    /// Re-checks every invariant: each tree spans, is acyclic and connected,
    /// and the trees are pairwise edge-disjoint.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.m()];
        for (i, tree) in self.trees.iter().enumerate() {
            if tree.len() + 1 != g.n() {
                return Err(Error::InvalidInput(format!(
                    "tree {i} has {} edges, expected {}",
                    tree.len(),
                    g.n() - 1
                )));
            }
            for &e in tree {
                if e >= g.m() {
                    return Err(Error::InvalidInput(format!("edge {e} out of range")));
                }
                if used[e] {
                    return Err(Error::InvalidInput(format!("edge {e} used twice")));
                }
                used[e] = true;
            }
            let mut dsu = Dsu::new(g.n());
            for &e in tree {
                let (u, v) = g.endpoints(e);
                if !dsu.union(u, v) {
                    return Err(Error::InvalidInput(format!("tree {i} contains a cycle")));
                }
            }
            // n-1 acyclic edges on n vertices are connected and spanning
        }
        Ok(())
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            self.parent[v] = self.find(self.parent[v]);
        }
        self.parent[v]
    }

    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

/// Edge-disjoint forests under augmentation.
struct Forests {
    k: usize,
    n: usize,
    /// forest index of each edge, or usize::MAX when unused
    home: Vec<usize>,
    /// adjacency per forest: adj[f][v] = (neighbor, edge)
    adj: Vec<Vec<Vec<(usize, usize)>>>,
    sizes: Vec<usize>,
}

const UNUSED: usize = usize::MAX;

impl Forests {
    fn new(k: usize, n: usize, m: usize) -> Self {
        Forests {
            k,
            n,
            home: vec![UNUSED; m],
            adj: vec![vec![Vec::new(); n]; k],
            sizes: vec![0; k],
        }
    }

    fn insert(&mut self, g: &Graph, e: usize, f: usize) {
        debug_assert_eq!(self.home[e], UNUSED);
        let (u, v) = g.endpoints(e);
        self.home[e] = f;
        self.adj[f][u].push((v, e));
        self.adj[f][v].push((u, e));
        self.sizes[f] += 1;
    }

    fn remove(&mut self, g: &Graph, e: usize) -> usize {
        let f = self.home[e];
        debug_assert_ne!(f, UNUSED);
        let (u, v) = g.endpoints(e);
        self.home[e] = UNUSED;
        self.adj[f][u].retain(|&(_, ee)| ee != e);
        self.adj[f][v].retain(|&(_, ee)| ee != e);
        self.sizes[f] -= 1;
        f
    }

    /// Path between u and v inside forest f, as edge indices, or None when
    /// they lie in different components.
    fn path(&self, f: usize, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.n]; // (prev vertex, edge)
        let mut seen = vec![false; self.n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                let mut path = Vec::new();
                let mut cur = v;
                while cur != u {
                    let (prev, e) = parent[cur].expect("trace back to u");
                    path.push(e);
                    cur = prev;
                }
                path.reverse();
                return Some(path);
            }
            for &(y, e) in &self.adj[f][x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    stack.push(y);
                }
            }
        }
        None
    }

    /// Tries to grow the union by one edge starting from the unused edge
    /// `e0`, relocating forest edges along an exchange chain when needed.
    /// Breadth-first labeling keeps the chain shortest, which is what makes
    /// applying the swaps in order valid.
    fn augment(&mut self, g: &Graph, e0: usize) -> bool {
        debug_assert_eq!(self.home[e0], UNUSED);
        let m = g.m();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; m]; // (labeling edge, forest)
        let mut visited = vec![false; m];
        visited[e0] = true;
        let mut queue = std::collections::VecDeque::from([e0]);

        while let Some(x) = queue.pop_front() {
            let (u, v) = g.endpoints(x);
            for f in 0..self.k {
                if self.home[x] == f {
                    continue;
                }
                match self.path(f, u, v) {
                    None => {
                        // x fits into f; cascade the chain of displacements
                        self.apply_chain(g, x, f, &parent);
                        return true;
                    }
                    Some(cycle_edges) => {
                        for e in cycle_edges {
                            if !visited[e] {
                                visited[e] = true;
                                parent[e] = Some((x, f));
                                queue.push_back(e);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn apply_chain(
        &mut self,
        g: &Graph,
        mut cur: usize,
        mut target: usize,
        parent: &[Option<(usize, usize)>],
    ) {
        loop {
            if self.home[cur] != UNUSED {
                let was = self.remove(g, cur);
                debug_assert_eq!(Some(was), parent[cur].map(|(_, f)| f));
            }
            let (u, v) = g.endpoints(cur);
            // the previous step's removal broke the cycle that blocked cur
            debug_assert!(self.path(target, u, v).is_none());
            self.insert(g, cur, target);
            match parent[cur] {
                None => break,
                Some((p, f)) => {
                    cur = p;
                    target = f;
                }
            }
        }
    }

    fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    fn trees(&self) -> Vec<Vec<usize>> {
        let mut trees = vec![Vec::new(); self.k];
        for (e, &f) in self.home.iter().enumerate() {
            if f != UNUSED {
                trees[f].push(e);
            }
        }
        trees
    }
}

/// Packs exactly `k` pairwise edge-disjoint spanning trees, or returns None
/// when fewer exist. Edges are offered for augmentation in index order.
pub fn pack_trees(g: &Graph, k: usize) -> Result<Option<TreePacking>> {
    if g.n() < 2 {
        return Err(Error::InvalidInput("need at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if k == 0 || g.m() < k * (g.n() - 1) {
        return Ok(None);
    }
    let mut forests = Forests::new(k, g.n(), g.m());
    for e in 0..g.m() {
        // greedy over the union matroid: an edge that cannot augment now
        // never can later
        forests.augment(g, e);
        if forests.total() == k * (g.n() - 1) {
            break;
        }
    }
    if forests.total() != k * (g.n() - 1) {
        return Ok(None);
    }
    let packing = TreePacking {
        trees: forests.trees(),
    };
    debug_assert!(packing.validate(g).is_ok());
    Ok(Some(packing))
}

/// Maximum number of pairwise edge-disjoint spanning trees, with the trees
/// as certificate.
pub fn tree_packing_number(g: &Graph) -> Result<(usize, TreePacking)> {
    if g.n() < 2 {
        return Err(Error::InvalidInput("need at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = TreePacking { trees: Vec::new() };
    let mut k = 1;
    while let Some(packing) = pack_trees(g, k)? {
        best = packing;
        k += 1;
    }
    Ok((best.k(), best))
}

/// Enumeration budget for the partition oracle.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PsiBudget {
    pub max_vertices: usize,
}

impl Default for PsiBudget {
    fn default() -> Self {
        PsiBudget { max_vertices: 12 }
    }
}

/// ψ(G) as an exact rational with its minimizing partition, and ⌊ψ⌋.
#[derive(Debug, Clone)]
pub struct PsiResult {
    pub psi: Ratio<u64>,
    pub psi_floor: u64,
    pub witness: VertexPartition,
}

/// Exact ψ(G) = min over vertex partitions (with at least 2 blocks) of
/// cross-edges / (blocks - 1), by full enumeration in restricted-growth
/// order. Ties keep the first partition found.
pub fn psi_oracle(g: &Graph, budget: PsiBudget) -> Result<PsiResult> {
    if g.n() < 2 {
        return Err(Error::InvalidInput("psi needs at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > budget.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "psi_oracle: n = {} exceeds budget {}",
            g.n(),
            budget.max_vertices
        )));
    }
    let edges = g.edges().to_vec();
    let mut best: Option<(Ratio<u64>, Vec<usize>)> = None;
    partitions::for_each_partition(g.n(), |rgs, nblocks| {
        if nblocks < 2 {
            return;
        }
        let cross = edges.iter().filter(|&&(u, v)| rgs[u] != rgs[v]).count() as u64;
        let ratio = Ratio::new(cross, (nblocks - 1) as u64);
        if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
            best = Some((ratio, rgs.to_vec()));
        }
    });
    let (psi, rgs) = best.expect("n >= 2 has a 2-block partition");
    let witness = VertexPartition::from_block_ids(&rgs)?;
    Ok(PsiResult {
        psi,
        psi_floor: psi.floor().to_integer(),
        witness,
    })
}

/// Colors tree i of a k-tree packing with color i and every leftover edge
/// with its own fresh color; the result uses e(G) - k(n-2) colors and is an
/// MC_k-coloring (each pair gains one path per tree).
pub fn packing_coloring(g: &Graph, k: usize) -> Result<EdgeColoring> {
    if k < 2 {
        return Err(Error::InvalidInput("packing_coloring needs k >= 2".into()));
    }
    let packing = pack_trees(g, k)?.ok_or_else(|| {
        Error::InvalidInput(format!(
            "graph has fewer than {k} edge-disjoint spanning trees"
        ))
    })?;
    let mut raw = vec![UNUSED; g.m()];
    for (i, tree) in packing.trees.iter().enumerate() {
        for &e in tree {
            raw[e] = i;
        }
    }
    let mut next = k;
    for slot in raw.iter_mut() {
        if *slot == UNUSED {
            *slot = next;
            next += 1;
        }
    }
    Ok(EdgeColoring::new(&raw))
}
