//! Simple undirected labeled graphs with stable edge indices.
//!
//! Vertices are `0..n`; edges are stored in insertion order and an edge's
//! index never changes, so edge colorings and edge subsets defined against a
//! graph stay meaningful across subgraph views.

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph. No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index), in edge-index order
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Endpoints may be
    /// given in either order; each stored edge is normalized to `(min, max)`.
    pub fn new(n: usize, edge_list: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut seen = std::collections::HashSet::with_capacity(edge_list.len());
        for (i, &(a, b)) in edge_list.iter().enumerate() {
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {i} is a loop at {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} = ({a},{b}) has an endpoint >= n = {n}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
            edges.push(e);
        }
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v` as `(neighbor, edge index)`, in edge-index order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    /// True when the two graphs have the same vertex count and edge set,
    /// ignoring edge order.
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        if self.n != other.n || self.m() != other.m() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`, sorted.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let comp = self.component_of(s);
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Spanning subgraph on the same vertex set keeping only `keep[e]` edges.
    /// Edge indices are re-assigned in ascending order of the original index.
    pub fn spanning_subgraph(&self, keep: &[bool]) -> Graph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(e, _)| keep[*e])
            .map(|(_, &p)| p)
            .collect();
        Graph::new(self.n, edges).expect("subgraph of a valid graph is valid")
    }

    /// Subgraph induced by a set of edge indices, with vertices relabeled to
    /// `0..`. Returns the new graph plus the map from new labels to old.
    pub fn edge_induced_subgraph(&self, edge_idxs: &[usize]) -> (Graph, Vec<usize>) {
        let mut verts: Vec<usize> = edge_idxs
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            back[old] = new;
        }
        let edges: Vec<_> = edge_idxs
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (back[u], back[v])
            })
            .collect();
        let g = Graph::new(verts.len(), edges).expect("induced subgraph is valid");
        (g, verts)
    }
}

/// One side of an edge cut together with the crossing edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    /// Vertex subset `S` with `∅ ⊂ S ⊂ V`, sorted.
    pub side: Vec<usize>,
    /// Exactly the edges with one endpoint in `S`, sorted by index.
    pub cut_edges: Vec<usize>,
}

impl CutCertificate {
    /// Checks the defining invariants against `g`: the side is a nonempty
    /// proper vertex subset and `cut_edges` is exactly the crossing set.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.side.is_empty() || self.side.len() >= g.n() {
            return false;
        }
        let mut in_side = vec![false; g.n()];
        for &v in &self.side {
            if v >= g.n() {
                return false;
            }
            in_side[v] = true;
        }
        let crossing: Vec<usize> = (0..g.m())
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                in_side[u] != in_side[v]
            })
            .collect();
        crossing == self.cut_edges
    }
}

/// A partition of the vertex set into disjoint nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut covered = 0usize;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in two blocks"
                    )));
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {covered} of {n} vertices"
            )));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(VertexPartition { blocks })
    }

    /// The all-singletons partition.
    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Builds a partition from a block-id array (`ids[v]` = block of `v`).
    pub fn from_block_ids(ids: &[usize]) -> Result<Self> {
        let n = ids.len();
        let nblocks = ids.iter().copied().max().map_or(0, |b| b + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (v, &b) in ids.iter().enumerate() {
            blocks[b].push(v);
        }
        VertexPartition::new(n, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block id of each vertex.
    pub fn block_ids(&self, n: usize) -> Vec<usize> {
        let mut ids = vec![0usize; n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                ids[v] = b;
            }
        }
        ids
    }
}

/// Number of edges of `g` joining distinct blocks of `p`. This is the edge
/// count of the shrunken graph `g/p` with parallel survivors all counted.
pub fn shrink_cross_edges(g: &Graph, p: &VertexPartition) -> Result<usize> {
    let total: usize = p.blocks().iter().map(|b| b.len()).sum();
    if total != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {total} vertices, graph has {}",
            g.n()
        )));
    }
    let ids = p.block_ids(g.n());
    Ok(g.edges().iter().filter(|&&(u, v)| ids[u] != ids[v]).count())
}

/// Biconnected blocks of a connected graph as edge-index sets.
///
/// Blocks partition the edge set; each block is either 2-connected or a
/// single cut edge. Blocks are returned with edges sorted and ordered by
/// their smallest edge index.
pub fn blocks(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }

    // Iterative Hopcroft-Tarjan with an explicit edge stack.
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();

    // (vertex, parent edge, next adjacency cursor)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;

    loop {
        let (v, pe, cur) = match stack.last_mut() {
            None => break,
            Some(frame) => {
                let cur = frame.2;
                frame.2 += 1;
                (frame.0, frame.1, cur)
            }
        };
        if cur < g.neighbors(v).len() {
            let (w, e) = g.neighbors(v)[cur];
            if e == pe {
                continue;
            }
            if disc[w] == usize::MAX {
                edge_stack.push(e);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, e, 0));
            } else if disc[w] < disc[v] {
                // back edge
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(frame) = stack.last_mut() {
                let u = frame.0;
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    // u closes a block: pop down to and including the tree
                    // edge (u,v), which was pushed before all deeper edges
                    let mut block = Vec::new();
                    while let Some(&e) = edge_stack.last() {
                        let (a, b) = g.endpoints(e);
                        block.push(e);
                        edge_stack.pop();
                        if (a == u && b == v) || (a == v && b == u) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    out.push(block);
                }
            }
        }
    }
    debug_assert!(edge_stack.is_empty());
    out.sort_by_key(|b| b[0]);
    Ok(out)
}
