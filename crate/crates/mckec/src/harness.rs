//! Corpus sweeps: exact values vs. the closed-form predictions.
//!
//! For a k-edge-connected graph with a minimum k-edge-connected spanning
//! subgraph H, the uniform color count satisfies umc_k = e(G) - e(H) + 1,
//! and mc_k is conjectured to be e(G) - e(H) + ⌊k/2⌋ (proved for k = 2 and
//! for several families). The sweep computes all quantities exactly where
//! budgets allow, compares, and quarantines anything non-exact as
//! inconclusive — a mismatch is only ever reported from exact components,
//! and is re-verified from scratch before being flagged.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring;
use crate::connectivity;
use crate::error::{Error, Result};
use crate::format;
use crate::graph::Graph;
use crate::kecss::{self, KecssBudget, KecssResult};
use crate::search::{self, SearchBudget};
use crate::tree_packing::{self, PsiBudget};

/// Budgets for one sweep entry.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct HarnessBudget {
    pub search: SearchBudget,
    pub kecss: KecssBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchFlag {
    Match,
    Mismatch,
    /// At least one contributing value hit a budget; never counted as a
    /// mismatch.
    Inconclusive,
}

/// One graph's exact values against the formula predictions.
/// Field order is the CSV column order.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub e_h: usize,
    pub e_h_exact: bool,
    pub mc: usize,
    pub mc_exact: bool,
    pub umc: usize,
    pub umc_exact: bool,
    /// e - e(H) + ⌊k/2⌋
    pub formula_mc: usize,
    /// e - e(H) + 1
    pub formula_umc: usize,
    pub mc_match: MatchFlag,
    pub umc_match: MatchFlag,
    /// Exact mc mismatch that survived recomputation from scratch.
    pub counterexample: bool,
    pub e_h_ms: u64,
    pub mc_ms: u64,
    pub umc_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SkippedGraph {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub matches: usize,
    pub mismatches: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureSweep {
    pub k: usize,
    pub summary: SweepSummary,
    pub records: Vec<ConjectureRecord>,
    pub skipped: Vec<SkippedGraph>,
}

/// Reads a graph6 corpus, deduplicating by string equality (no isomorphism
/// reduction), keeping first occurrences in order.
pub fn load_corpus(text: &str) -> Result<Vec<(String, Graph)>> {
    let mut seen = std::collections::HashSet::new();
    Ok(format::parse_graph6_file(text)?
        .into_iter()
        .filter(|(s, _)| seen.insert(s.clone()))
        .collect())
}

/// e(H) with exactness: the exact solver within budget, else the greedy
/// minimal subgraph.
fn kecss_with_fallback(g: &Graph, k: usize, budget: KecssBudget) -> Result<(KecssResult, bool)> {
    match kecss::minimum_kecss(g, k, budget) {
        Ok(r) => Ok((r, true)),
        Err(Error::BudgetExceeded(_)) => Ok((kecss::minimalize(g, k)?, false)),
        Err(e) => Err(e),
    }
}

fn sweep_one(
    g: &Graph,
    graph6: String,
    k: usize,
    budget: HarnessBudget,
) -> Result<ConjectureRecord> {
    let t0 = Instant::now();
    let (h, e_h_exact) = kecss_with_fallback(g, k, budget.kecss)?;
    let e_h_ms = t0.elapsed().as_millis() as u64;

    let t0 = Instant::now();
    let mc = search::exact_mc_k(g, k, budget.search)?;
    let mc_ms = t0.elapsed().as_millis() as u64;

    let t0 = Instant::now();
    let umc = search::exact_umc_k(g, k, budget.search)?;
    let umc_ms = t0.elapsed().as_millis() as u64;

    let formula_mc = g.m() - h.size + k / 2;
    let formula_umc = g.m() - h.size + 1;

    let mc_match = match_flag(e_h_exact && mc.exact, mc.value, formula_mc);
    let umc_match = match_flag(e_h_exact && umc.exact, umc.value, formula_umc);

    let mut counterexample = false;
    if mc_match == MatchFlag::Mismatch {
        counterexample = reverify_mismatch(g, k, budget, formula_mc, mc.value)?;
    }

    Ok(ConjectureRecord {
        graph6,
        n: g.n(),
        m: g.m(),
        k,
        e_h: h.size,
        e_h_exact,
        mc: mc.value,
        mc_exact: mc.exact,
        umc: umc.value,
        umc_exact: umc.exact,
        formula_mc,
        formula_umc,
        mc_match,
        umc_match,
        counterexample,
        e_h_ms,
        mc_ms,
        umc_ms,
    })
}

fn match_flag(exact: bool, value: usize, formula: usize) -> MatchFlag {
    if !exact {
        MatchFlag::Inconclusive
    } else if value == formula {
        MatchFlag::Match
    } else {
        MatchFlag::Mismatch
    }
}

/// Recomputes everything from scratch and re-checks the witness before an
/// exact mismatch may be reported as a counterexample.
fn reverify_mismatch(
    g: &Graph,
    k: usize,
    budget: HarnessBudget,
    formula_mc: usize,
    claimed_mc: usize,
) -> Result<bool> {
    let h = kecss::minimum_kecss(g, k, budget.kecss)?;
    if !h.validate(g) {
        return Ok(false);
    }
    let mc = search::exact_mc_k(g, k, budget.search)?;
    if !mc.exact || mc.value != claimed_mc {
        return Ok(false);
    }
    let witness_ok =
        coloring::is_mc_k(g, &mc.witness, k)?.pass && mc.witness.num_colors() == mc.value;
    let formula_again = g.m() - h.size + k / 2;
    Ok(witness_ok && formula_again == formula_mc && mc.value != formula_mc)
}

/// Sweeps a corpus: for each k-edge-connected graph, exact e(H), mc_k and
/// umc_k against the formulas. Graphs that are not k-edge-connected are
/// skipped with a note. Entries are processed in parallel under the current
/// rayon pool; records keep input order.
pub fn run_conjecture(
    corpus: &[Graph],
    k: usize,
    budget: HarnessBudget,
) -> Result<ConjectureSweep> {
    if corpus.is_empty() {
        return Err(Error::InvalidInput("empty corpus".into()));
    }
    if k < 2 {
        return Err(Error::InvalidInput("k must be >= 2".into()));
    }
    let outcomes: Vec<std::result::Result<ConjectureRecord, SkippedGraph>> = corpus
        .par_iter()
        .map(|g| {
            let graph6 = format::encode_graph6(g);
            if !connectivity::is_k_edge_connected(g, k) {
                return Ok(Err(SkippedGraph {
                    graph6,
                    reason: format!("not {k}-edge-connected"),
                }));
            }
            sweep_one(g, graph6, k, budget).map(Ok)
        })
        .collect::<Result<_>>()?;

    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for item in outcomes {
        match item {
            Ok(r) => records.push(r),
            Err(s) => skipped.push(s),
        }
    }
    let mut summary = SweepSummary::default();
    for r in &records {
        match (r.mc_match, r.umc_match) {
            (MatchFlag::Inconclusive, _) | (_, MatchFlag::Inconclusive) => {
                summary.inconclusive += 1
            }
            (MatchFlag::Mismatch, _) | (_, MatchFlag::Mismatch) => summary.mismatches += 1,
            _ => summary.matches += 1,
        }
    }
    Ok(ConjectureSweep {
        k,
        summary,
        records,
        skipped,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub applicable: bool,
    /// None when the check was not applicable or hit a budget.
    pub holds: Option<bool>,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremEntry {
    pub graph6: String,
    pub k: usize,
    pub checks: Vec<TheoremCheck>,
}

/// A failed check with enough data to reproduce it; on a correct build this
/// marks an implementation bug, not a refuted theorem.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremViolation {
    pub graph6: String,
    pub k: usize,
    pub check: &'static str,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub k: usize,
    pub entries: Vec<TheoremEntry>,
    pub violations: Vec<TheoremViolation>,
    pub skipped: Vec<SkippedGraph>,
}

/// Per-graph assertions of the proved statements:
/// - mc_2 = e - e(H) + 1 (k = 2 only);
/// - mc_k <= k-1 on minimally k-edge-connected graphs;
/// - mc_2(G) = Σ mc_2(B_i) - t + 1 over the t biconnected blocks;
/// - e - k(n-1) + 1 <= umc_k <= e - ⌈kn/2⌉ + 1;
/// - mc_k >= e - k(n-2) whenever k trees pack.
///
/// Budget-limited values make a check inapplicable rather than failed.
pub fn check_theorems(corpus: &[Graph], k: usize, budget: HarnessBudget) -> Result<TheoremReport> {
    if corpus.is_empty() {
        return Err(Error::InvalidInput("empty corpus".into()));
    }
    if k < 2 {
        return Err(Error::InvalidInput("k must be >= 2".into()));
    }
    let mut entries = Vec::new();
    let mut violations = Vec::new();
    let mut skipped = Vec::new();
    for g in corpus {
        let graph6 = format::encode_graph6(g);
        if !connectivity::is_k_edge_connected(g, k) {
            skipped.push(SkippedGraph {
                graph6,
                reason: format!("not {k}-edge-connected"),
            });
            continue;
        }
        let mut checks = Vec::new();
        let (h, e_h_exact) = kecss_with_fallback(g, k, budget.kecss)?;
        let mc = search::exact_mc_k(g, k, budget.search)?;
        let umc = search::exact_umc_k(g, k, budget.search)?;
        let (n, m) = (g.n() as i64, g.m() as i64);
        let ki = k as i64;

        // mc_2 formula
        if k == 2 {
            let applicable = e_h_exact && mc.exact;
            let holds = applicable.then(|| mc.value == g.m() - h.size + 1);
            checks.push(TheoremCheck {
                name: "mc2_formula",
                applicable,
                holds,
                details: format!("mc_2 = {}, e - e(H) + 1 = {}", mc.value, g.m() - h.size + 1),
            });
        }

        // minimal graphs: mc_k <= k - 1
        let mader = kecss::mader_checks(g, k)?;
        {
            let applicable = mader.is_minimal && mc.exact;
            let holds = applicable.then_some(mc.value < k);
            checks.push(TheoremCheck {
                name: "minimal_mc_upper_bound",
                applicable,
                holds,
                details: if mader.is_minimal {
                    format!("minimally {k}-edge-connected, mc_{k} = {}", mc.value)
                } else {
                    "not minimal".into()
                },
            });
        }

        // block identity for mc_2
        if k == 2 {
            let block_sets = crate::graph::blocks(g)?;
            let mut applicable = mc.exact;
            let mut total = 0usize;
            for block in &block_sets {
                let (sub, _) = g.edge_induced_subgraph(block);
                let sub_mc = search::exact_mc_k(&sub, 2, budget.search)?;
                applicable &= sub_mc.exact;
                total += sub_mc.value;
            }
            let t = block_sets.len();
            let predicted = total + 1 - t;
            let holds = applicable.then_some(mc.value == predicted);
            checks.push(TheoremCheck {
                name: "mc2_block_identity",
                applicable,
                holds,
                details: format!(
                    "t = {t}, Σ mc_2(B_i) - t + 1 = {predicted}, mc_2 = {}",
                    mc.value
                ),
            });
        }

        // umc bounds
        {
            let applicable = umc.exact;
            let lower = m - ki * (n - 1) + 1;
            let upper = m - (ki * n + 1) / 2 + 1;
            let holds =
                applicable.then_some(lower <= umc.value as i64 && umc.value as i64 <= upper);
            checks.push(TheoremCheck {
                name: "umc_bounds",
                applicable,
                holds,
                details: format!("{lower} <= umc_{k} = {} <= {upper}", umc.value),
            });
        }

        // tree-packing lower bound
        {
            let psi = tree_packing::psi_oracle(g, PsiBudget::default());
            let (applicable, details) = match &psi {
                Ok(r) => (
                    r.psi_floor >= k as u64 && mc.exact,
                    format!("⌊ψ⌋ = {}, e - k(n-2) = {}", r.psi_floor, m - ki * (n - 2)),
                ),
                Err(_) => (false, "ψ out of budget".into()),
            };
            let holds = applicable.then(|| mc.value as i64 >= m - ki * (n - 2));
            checks.push(TheoremCheck {
                name: "packing_lower_bound",
                applicable,
                holds,
                details,
            });
        }

        for check in &checks {
            if check.holds == Some(false) {
                violations.push(TheoremViolation {
                    graph6: graph6.clone(),
                    k,
                    check: check.name,
                    details: format!(
                        "{} | n={} m={} e_h={} mc={} umc={}",
                        check.details,
                        g.n(),
                        g.m(),
                        h.size,
                        mc.value,
                        umc.value
                    ),
                });
            }
        }
        entries.push(TheoremEntry { graph6, k, checks });
    }
    Ok(TheoremReport {
        k,
        entries,
        violations,
        skipped,
    })
}

/// First Hamiltonian cycle found by backtracking (vertices in visit order,
/// starting at 0), or None. Neighbors are tried in ascending order, so the
/// result is deterministic.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let mut nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
            ns.sort_unstable();
            ns
        })
        .collect();
    for ns in &mut nbrs {
        ns.dedup();
    }
    let mut path = vec![0usize];
    let mut visited = vec![false; n];
    visited[0] = true;
    fn extend(nbrs: &[Vec<usize>], path: &mut Vec<usize>, visited: &mut [bool], n: usize) -> bool {
        let last = *path.last().expect("path starts nonempty");
        if path.len() == n {
            return nbrs[last].contains(&0);
        }
        for &w in &nbrs[last] {
            if !visited[w] {
                visited[w] = true;
                path.push(w);
                if extend(nbrs, path, visited, n) {
                    return true;
                }
                path.pop();
                visited[w] = false;
            }
        }
        false
    }
    extend(&nbrs, &mut path, &mut visited, n).then_some(path)
}

/// Hamiltonicity decision through the uniform color count: a 2-edge-connected
/// graph is Hamiltonian iff umc_2 = e - n + 1, i.e. iff its minimum
/// 2-edge-connected spanning subgraph is a Hamiltonian cycle. The record
/// carries both this decision and an independent backtracking search.
#[derive(Debug, Clone, Serialize)]
pub struct HamiltonicityReport {
    pub hamiltonian: bool,
    pub umc2: usize,
    pub umc2_exact: bool,
    /// e - n + 1: the value umc_2 takes exactly on Hamiltonian graphs.
    pub expected_if_hamiltonian: usize,
    pub min_2ecss: KecssResult,
    pub direct_cycle: Option<Vec<usize>>,
    /// The two routes agree; false would mark an implementation bug.
    pub agree: bool,
}

pub fn hamiltonicity_via_umc2(g: &Graph, budget: KecssBudget) -> Result<HamiltonicityReport> {
    if !connectivity::is_k_edge_connected(g, 2) {
        return Err(Error::NotKEdgeConnected { k: 2 });
    }
    // umc_2 = e - e(H) + 1 with H a minimum 2-edge-connected spanning
    // subgraph; exact whenever e(H) is.
    let h = kecss::minimum_kecss(g, 2, budget)?;
    let umc2 = g.m() - h.size + 1;
    let expected = g.m() - g.n() + 1;
    let hamiltonian = umc2 == expected;
    let direct = hamiltonian_cycle(g);
    let agree = hamiltonian == direct.is_some();
    Ok(HamiltonicityReport {
        hamiltonian,
        umc2,
        umc2_exact: true,
        expected_if_hamiltonian: expected,
        min_2ecss: h,
        direct_cycle: direct,
        agree,
    })
}
