//! Exact mc_k and umc_k by exhaustive search over edge partitions.
//!
//! An extremal coloring can be assumed to have connected color classes: a
//! disconnected class could donate one component to a fresh color, gaining a
//! color without breaking any monochromatic path (paths never cross
//! components). The search therefore enumerates only set partitions of the
//! edge set whose blocks induce connected subgraphs — restricted growth
//! strings in lexicographic order — pruning on the incumbent and on blocks
//! that no remaining edge could reconnect. Feasibility is checked with the
//! full verifier at complete partitions only.

use serde::Serialize;

use crate::coloring::{self, EdgeColoring};
use crate::connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Node and size caps for the partition search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Graphs with more edges are not enumerated; the result degrades to the
    /// trivial monochromatic witness flagged non-exact.
    pub max_edges: usize,
    /// Cap on enumeration steps; on overflow the best coloring found so far
    /// is returned, flagged non-exact.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: 12,
            max_nodes: 50_000_000,
        }
    }
}

/// Result of an exact search. When `exact` is true the value is proven by
/// exhaustion; otherwise it is only a lower bound witnessed by the coloring.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub value: usize,
    pub witness: EdgeColoring,
    pub explored: u64,
    pub exact: bool,
    pub budget: SearchBudget,
}

#[derive(Clone, Copy)]
enum Mode {
    Mc,
    Umc,
}

/// Maximum number of colors of any MC_k-coloring of `g`, by exhaustive
/// search. Requires `g` k-edge-connected and k >= 2. Among optimal witnesses
/// the lexicographically smallest normalized assignment is returned.
pub fn exact_mc_k(g: &Graph, k: usize, budget: SearchBudget) -> Result<SearchResult> {
    exact_search(g, k, budget, Mode::Mc)
}

/// Maximum number of colors of any UMC_k-coloring of `g`; otherwise as
/// [`exact_mc_k`].
pub fn exact_umc_k(g: &Graph, k: usize, budget: SearchBudget) -> Result<SearchResult> {
    exact_search(g, k, budget, Mode::Umc)
}

fn exact_search(g: &Graph, k: usize, budget: SearchBudget, mode: Mode) -> Result<SearchResult> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("k must be >= 2, got {k}")));
    }
    if !connectivity::is_k_edge_connected(g, k) {
        return Err(Error::NotKEdgeConnected { k });
    }
    let m = g.m();
    if m > budget.max_edges {
        return Ok(SearchResult {
            value: 1,
            witness: EdgeColoring::monochromatic(m),
            explored: 0,
            exact: false,
            budget,
        });
    }

    let mut search = PartitionSearch {
        g,
        k,
        mode,
        rgs: vec![0; m],
        incumbent: None,
        explored: 0,
        max_nodes: budget.max_nodes,
        exhausted: false,
    };
    // rgs[0] is pinned to 0; positions 1.. branch
    search.descend(1, 0);

    // an exhausted node budget can strike before the first complete
    // partition; the monochromatic coloring is always feasible here
    let (value, witness) = search
        .incumbent
        .map(|(v, rgs)| (v, EdgeColoring::new(&rgs)))
        .unwrap_or((1, EdgeColoring::monochromatic(m)));
    Ok(SearchResult {
        value,
        witness,
        explored: search.explored,
        exact: !search.exhausted,
        budget,
    })
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    k: usize,
    mode: Mode,
    rgs: Vec<usize>,
    incumbent: Option<(usize, Vec<usize>)>,
    explored: u64,
    max_nodes: u64,
    exhausted: bool,
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

    fn union(&mut self, u: usize, v: usize) {
        let (ru, rv) = (self.find(u), self.find(v));
        self.parent[ru] = rv;
    }
}

impl PartitionSearch<'_> {
    /// Are the edges `select`ed connected (as an edge set) after additionally
    /// uniting all `glue` edges? All unions happen before any comparison.
    fn edges_connected(
        &self,
        select: impl Fn(usize) -> bool + Copy,
        glue: impl Fn(usize) -> bool,
    ) -> bool {
        let mut dsu = Dsu::new(self.g.n());
        for e in 0..self.g.m() {
            if select(e) || glue(e) {
                let (u, v) = self.g.endpoints(e);
                dsu.union(u, v);
            }
        }
        let mut root = None;
        for e in 0..self.g.m() {
            if !select(e) {
                continue;
            }
            let r = dsu.find(self.g.endpoints(e).0);
            match root {
                None => root = Some(r),
                Some(prev) if prev != r => return false,
                _ => {}
            }
        }
        true
    }

    /// Could block `b`, as assigned among edges 0..=pos, still become
    /// connected if it absorbed every unassigned edge?
    fn block_connectable(&self, pos: usize, b: usize) -> bool {
        self.edges_connected(|e| e <= pos && self.rgs[e] == b, |e| e > pos)
    }

    fn blocks_all_connected(&self, nblocks: usize) -> bool {
        (0..nblocks).all(|b| self.edges_connected(|e| self.rgs[e] == b, |_| false))
    }

    fn descend(&mut self, pos: usize, max_used: usize) {
        if self.exhausted {
            return;
        }
        let m = self.g.m();
        if pos == m {
            let nblocks = max_used + 1;
            if self
                .incumbent
                .as_ref()
                .is_some_and(|&(best, _)| nblocks <= best)
            {
                return;
            }
            if !self.blocks_all_connected(nblocks) {
                return;
            }
            let coloring = EdgeColoring::new(&self.rgs);
            let report = match self.mode {
                Mode::Mc => coloring::is_mc_k(self.g, &coloring, self.k),
                Mode::Umc => coloring::is_umc_k(self.g, &coloring, self.k),
            }
            .expect("coloring matches graph");
            if report.pass {
                // lexicographic enumeration: the first partition reaching a
                // block count is the lexicographically smallest with it
                self.incumbent = Some((nblocks, self.rgs.clone()));
            }
            return;
        }
        // a partial partition with b blocks and r unassigned edges can reach
        // at most b + r blocks
        let remaining = m - pos;
        let reachable = max_used + 1 + remaining;
        if self
            .incumbent
            .as_ref()
            .is_some_and(|&(best, _)| reachable <= best)
        {
            return;
        }
        for b in 0..=(max_used + 1).min(m - 1) {
            self.explored += 1;
            if self.explored > self.max_nodes {
                self.exhausted = true;
                return;
            }
            self.rgs[pos] = b;
            if self.block_connectable(pos, b) {
                self.descend(pos + 1, max_used.max(b));
            }
            if self.exhausted {
                return;
            }
        }
        self.rgs[pos] = 0;
    }
}

/// Applies color-count-non-decreasing local moves to an MC_k-coloring until
/// none fires:
///
/// (a) a class with several components is split, one fresh color per extra
///     component — always sound, since monochromatic paths never leave a
///     component;
/// (b) a class that is neither 2-edge-connected nor a tree keeps one cycle
///     edge at a cut-attached 2-edge-connected core and donates the rest of
///     its edges to another color — kept only when the verifier still
///     passes.
///
/// Termination: a move is accepted only when the potential
/// (colors, trivial classes, non-bridge edges) strictly increases
/// lexicographically; each component is bounded by m.
pub fn improve_coloring(g: &Graph, c: &EdgeColoring, k: usize) -> Result<EdgeColoring> {
    let start = coloring::is_mc_k(g, c, k)?;
    if !start.pass {
        return Err(Error::InvalidInput(
            "improve_coloring requires an MC_k-coloring".into(),
        ));
    }
    let mut current = c.clone();
    loop {
        if let Some(next) = split_disconnected_class(g, &current) {
            current = next;
            continue;
        }
        match transfer_move(g, &current, k)? {
            Some(next) => current = next,
            None => break,
        }
    }
    debug_assert!(coloring::is_mc_k(g, &current, k)?.pass);
    Ok(current)
}

/// (colors, trivial classes, edges on cycles within their class).
fn potential(g: &Graph, c: &EdgeColoring) -> Result<(usize, usize, usize)> {
    let classes = coloring::color_classes(g, c)?;
    let trivial = classes.iter().filter(|cl| cl.trivial).count();
    let mut non_bridge = 0usize;
    for class in &classes {
        let (sub, _) = g.edge_induced_subgraph(&class.edges);
        for comp in sub.components() {
            let comp_edges: Vec<usize> = (0..sub.m())
                .filter(|&e| comp.contains(&sub.endpoints(e).0))
                .collect();
            if comp_edges.is_empty() {
                continue;
            }
            let (piece, _) = sub.edge_induced_subgraph(&comp_edges);
            for block in crate::graph::blocks(&piece)? {
                if block.len() > 1 {
                    non_bridge += block.len();
                }
            }
        }
    }
    Ok((c.num_colors(), trivial, non_bridge))
}

fn split_disconnected_class(g: &Graph, c: &EdgeColoring) -> Option<EdgeColoring> {
    let classes = coloring::color_classes(g, c).ok()?;
    let mut raw = c.assignment().to_vec();
    let mut next = c.num_colors();
    for class in &classes {
        let (sub, vmap) = g.edge_induced_subgraph(&class.edges);
        let comps = sub.components();
        if comps.len() <= 1 {
            continue;
        }
        // recolor every component after the first with a fresh color
        for comp in comps.iter().skip(1) {
            let in_comp: Vec<bool> = {
                let mut f = vec![false; g.n()];
                for &v in comp {
                    f[vmap[v]] = true;
                }
                f
            };
            for &e in &class.edges {
                let (u, _) = g.endpoints(e);
                if in_comp[u] {
                    raw[e] = next;
                }
            }
            next += 1;
        }
        return Some(EdgeColoring::new(&raw));
    }
    None
}

fn transfer_move(g: &Graph, c: &EdgeColoring, k: usize) -> Result<Option<EdgeColoring>> {
    let classes = coloring::color_classes(g, c)?;
    let before = potential(g, c)?;
    for class in &classes {
        if class.edges.len() < 2 {
            continue;
        }
        let (sub, _) = g.edge_induced_subgraph(&class.edges);
        if !sub.is_connected() {
            continue;
        }
        let sub_blocks = crate::graph::blocks(&sub)?;
        let has_bridge = sub_blocks.iter().any(|b| b.len() == 1);
        let has_cycle = sub_blocks.iter().any(|b| b.len() > 1);
        if !(has_bridge && has_cycle) {
            continue; // 2-edge-connected, or a tree
        }
        // a cut edge with an endpoint inside a nontrivial block, and a cycle
        // edge of that block at the shared vertex
        let Some(kept) = pick_kept_edge(&sub, &sub_blocks) else {
            continue;
        };
        let kept_global = class.edges[kept];
        for donor in 0..c.num_colors() {
            if donor == class.color {
                continue;
            }
            let mut raw = c.assignment().to_vec();
            for &e in &class.edges {
                if e != kept_global {
                    raw[e] = donor;
                }
            }
            let candidate = EdgeColoring::new(&raw);
            debug_assert_eq!(candidate.num_colors(), c.num_colors());
            if potential(g, &candidate)? > before && coloring::is_mc_k(g, &candidate, k)?.pass {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}

/// In a class with both bridges and cycles: find a bridge endpoint lying in
/// a nontrivial block and return one of that block's edges at the shared
/// vertex (lowest local edge index).
fn pick_kept_edge(sub: &Graph, sub_blocks: &[Vec<usize>]) -> Option<usize> {
    let mut in_nontrivial = vec![false; sub.n()];
    for block in sub_blocks {
        if block.len() > 1 {
            for &e in block {
                let (u, v) = sub.endpoints(e);
                in_nontrivial[u] = true;
                in_nontrivial[v] = true;
            }
        }
    }
    for block in sub_blocks {
        if block.len() != 1 {
            continue;
        }
        let bridge = block[0];
        let (u, v) = sub.endpoints(bridge);
        for x in [u, v] {
            if in_nontrivial[x] {
                // lowest cycle edge at x
                let mut candidates: Vec<usize> = sub
                    .neighbors(x)
                    .iter()
                    .map(|&(_, e)| e)
                    .filter(|&e| sub_blocks.iter().any(|b| b.len() > 1 && b.contains(&e)))
                    .collect();
                candidates.sort_unstable();
                if let Some(&e) = candidates.first() {
                    return Some(e);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn cycle_values_are_one() {
        let c5 = generate::cycle(5).unwrap();
        let r = exact_mc_k(&c5, 2, SearchBudget::default()).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.exact);
        let r = exact_umc_k(&c5, 2, SearchBudget::default()).unwrap();
        assert_eq!(r.value, 1);
    }

    #[test]
    fn k4_values_are_three() {
        let k4 = generate::complete(4);
        let mc = exact_mc_k(&k4, 2, SearchBudget::default()).unwrap();
        assert_eq!(mc.value, 3);
        assert!(mc.exact);
        assert!(coloring::is_mc_k(&k4, &mc.witness, 2).unwrap().pass);
        assert_eq!(mc.witness.num_colors(), 3);

        let umc = exact_umc_k(&k4, 2, SearchBudget::default()).unwrap();
        assert_eq!(umc.value, 3);
        assert!(coloring::is_umc_k(&k4, &umc.witness, 2).unwrap().pass);
    }

    #[test]
    fn k33_umc3_is_one() {
        let k33 = generate::complete_bipartite(3, 3);
        let r = exact_umc_k(&k33, 3, SearchBudget::default()).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.exact);
    }

    #[test]
    fn octahedron_at_the_edge_budget_boundary() {
        // K_{2,2,2}: 12 edges, exactly the default budget. Hamiltonian with
        // a 6-edge minimum core, so both counts are 12 - 6 + 1.
        let edges: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| ((u + 1)..6).map(move |v| (u, v)))
            .filter(|&(u, v)| v != u + 3)
            .collect();
        let g = crate::graph::Graph::new(6, edges).unwrap();
        assert_eq!(g.m(), 12);
        let mc = exact_mc_k(&g, 2, SearchBudget::default()).unwrap();
        assert!(mc.exact);
        assert_eq!(mc.value, 7);
        let umc = exact_umc_k(&g, 2, SearchBudget::default()).unwrap();
        assert!(umc.exact);
        assert_eq!(umc.value, 7);
    }

    #[test]
    fn rejects_bad_inputs_and_budgets() {
        let c5 = generate::cycle(5).unwrap();
        assert!(exact_mc_k(&c5, 3, SearchBudget::default()).is_err());
        assert!(exact_mc_k(&c5, 1, SearchBudget::default()).is_err());

        let tight = SearchBudget {
            max_edges: 4,
            max_nodes: 1000,
        };
        let r = exact_mc_k(&c5, 2, tight).unwrap();
        assert!(!r.exact);
        assert_eq!(r.value, 1);

        let starved = SearchBudget {
            max_edges: 12,
            max_nodes: 3,
        };
        let r = exact_mc_k(&generate::complete(4), 2, starved).unwrap();
        assert!(!r.exact);
    }

    #[test]
    fn improver_splits_disconnected_classes() {
        // K_4 with the Hamiltonian cycle in one color and both chords in a
        // second: the chord class has two components and should split
        let k4 = generate::complete(4);
        let mut raw = vec![0usize; 6];
        raw[k4.edge_index(0, 2).unwrap()] = 1;
        raw[k4.edge_index(1, 3).unwrap()] = 1;
        let c = EdgeColoring::new(&raw);
        assert_eq!(c.num_colors(), 2);
        assert!(coloring::is_mc_k(&k4, &c, 2).unwrap().pass);
        let improved = improve_coloring(&k4, &c, 2).unwrap();
        assert_eq!(improved.num_colors(), 3);
        assert!(coloring::is_mc_k(&k4, &improved, 2).unwrap().pass);
    }

    #[test]
    fn improver_transfer_move_fires_on_bridged_cycle_classes() {
        // K_6 with its Hamiltonian cycle in color 0 (alone enough for MC_2),
        // one class holding a chord triangle plus a pendant chord, and the
        // remaining chords trivial. The bridged class is neither
        // 2-edge-connected nor a tree, so the transfer move applies.
        let k6 = generate::complete(6);
        let mut raw = vec![usize::MAX; 15];
        for w in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)] {
            raw[k6.edge_index(w.0, w.1).unwrap()] = 0;
        }
        for w in [(0, 2), (2, 4), (0, 4), (1, 4)] {
            raw[k6.edge_index(w.0, w.1).unwrap()] = 1;
        }
        let mut next = 2;
        for slot in raw.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let c = EdgeColoring::new(&raw);
        assert!(coloring::is_mc_k(&k6, &c, 2).unwrap().pass);
        let trivial_before = coloring::color_classes(&k6, &c)
            .unwrap()
            .iter()
            .filter(|cl| cl.trivial)
            .count();

        let improved = improve_coloring(&k6, &c, 2).unwrap();
        assert!(improved.num_colors() >= c.num_colors());
        assert!(coloring::is_mc_k(&k6, &improved, 2).unwrap().pass);
        let classes = coloring::color_classes(&k6, &improved).unwrap();
        let trivial_after = classes.iter().filter(|cl| cl.trivial).count();
        assert!(trivial_after > trivial_before, "transfer move never fired");
        // the bridged class is gone: at the fixpoint reached here every
        // class is 2-edge-connected or a tree
        for class in &classes {
            let (sub, _) = k6.edge_induced_subgraph(&class.edges);
            let bs = crate::graph::blocks(&sub).unwrap();
            let bridged = bs.iter().any(|b| b.len() == 1) && bs.iter().any(|b| b.len() > 1);
            assert!(!bridged);
        }
    }

    #[test]
    fn improver_is_identity_on_extremal_witnesses() {
        let k4 = generate::complete(4);
        let best = exact_mc_k(&k4, 2, SearchBudget::default()).unwrap();
        let improved = improve_coloring(&k4, &best.witness, 2).unwrap();
        assert_eq!(improved.num_colors(), best.value);

        let mono = EdgeColoring::monochromatic(6);
        let improved = improve_coloring(&k4, &mono, 2).unwrap();
        assert!(improved.num_colors() >= 1);
        assert!(coloring::is_mc_k(&k4, &improved, 2).unwrap().pass);
    }

    #[test]
    fn improver_rejects_invalid_input() {
        let k4 = generate::complete(4);
        assert!(improve_coloring(&k4, &EdgeColoring::rainbow(6), 2).is_err());
    }
}
