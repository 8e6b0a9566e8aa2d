//! Edge colorings and the monochromatic k-edge-connection verifiers.
//!
//! Because color classes are edge-disjoint and a monochromatic path stays
//! inside one class, a maximum family of pairwise edge-disjoint monochromatic
//! u-v paths decomposes per class: the total is the sum over classes of the
//! class-local edge connectivity between u and v. The verifiers compute
//! exactly that; an exhaustive path-set oracle in the test suite pins the
//! reduction down at small sizes.

use serde::Serialize;

use crate::connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An assignment of color ids to edge indices, normalized so that ids are
/// `0..t` in order of first occurrence and every id is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    assignment: Vec<usize>,
    num_colors: usize,
}

// serializes as the bare assignment array
impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.assignment.serialize(serializer)
    }
}

impl EdgeColoring {
    /// Builds a coloring from raw ids, renumbering them by first occurrence.
    pub fn new(raw: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new(); // (raw id, normalized)
        let mut assignment = Vec::with_capacity(raw.len());
        for &c in raw {
            let id = match map.iter().find(|&&(r, _)| r == c) {
                Some(&(_, id)) => id,
                None => {
                    let id = map.len();
                    map.push((c, id));
                    id
                }
            };
            assignment.push(id);
        }
        EdgeColoring {
            assignment,
            num_colors: map.len(),
        }
    }

    /// True when `raw` already is in normalized form.
    pub fn is_normalized(raw: &[usize]) -> bool {
        let mut next = 0usize;
        for &c in raw {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }

    pub fn monochromatic(m: usize) -> Self {
        EdgeColoring {
            assignment: vec![0; m],
            num_colors: if m == 0 { 0 } else { 1 },
        }
    }

    pub fn rainbow(m: usize) -> Self {
        EdgeColoring {
            assignment: (0..m).collect(),
            num_colors: m,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color_of(&self, edge: usize) -> usize {
        self.assignment[edge]
    }
}

/// All edges of one color, with the vertices they touch.
#[derive(Debug, Clone)]
pub struct ColorClass {
    pub color: usize,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
    /// Exactly one edge carries this color.
    pub trivial: bool,
}

fn check_coloring(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.len() != g.m() {
        return Err(Error::Coloring(format!(
            "coloring has {} entries, graph has {} edges",
            c.len(),
            g.m()
        )));
    }
    Ok(())
}

/// Splits a coloring into its color classes. Classes partition the edge set.
pub fn color_classes(g: &Graph, c: &EdgeColoring) -> Result<Vec<ColorClass>> {
    check_coloring(g, c)?;
    let mut edges = vec![Vec::new(); c.num_colors()];
    for (e, &col) in c.assignment().iter().enumerate() {
        edges[col].push(e);
    }
    Ok(edges
        .into_iter()
        .enumerate()
        .map(|(color, edges)| {
            let mut vertices: Vec<usize> = edges
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.endpoints(e);
                    [u, v]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            let trivial = edges.len() == 1;
            ColorClass {
                color,
                edges,
                vertices,
                trivial,
            }
        })
        .collect())
}

/// Per-color edge-disjoint path counts between one vertex pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCounts {
    pub per_color: Vec<usize>,
    pub total: usize,
}

/// Verification mode: sum of per-color counts vs. best single color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Mc,
    Umc,
}

/// The first vertex pair that fails, with its per-color path counts.
#[derive(Debug, Clone, Serialize)]
pub struct FailureWitness {
    pub pair: (usize, usize),
    pub per_color: Vec<usize>,
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairSummary {
    pub pair: (usize, usize),
    pub per_color: Vec<usize>,
    pub total: usize,
}

/// Outcome of an MC_k / UMC_k verification.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub k: usize,
    pub pass: bool,
    pub witness: Option<FailureWitness>,
    /// Filled only by the detailed variants.
    pub pair_summaries: Option<Vec<PairSummary>>,
}

/// Reusable per-class state for verifying many pairs of one coloring.
struct ClassViews {
    masks: Vec<Vec<bool>>,
    has_vertex: Vec<Vec<bool>>,
}

impl ClassViews {
    fn build(g: &Graph, c: &EdgeColoring) -> Self {
        let t = c.num_colors();
        let mut masks = vec![vec![false; g.m()]; t];
        let mut has_vertex = vec![vec![false; g.n()]; t];
        for (e, &col) in c.assignment().iter().enumerate() {
            masks[col][e] = true;
            let (u, v) = g.endpoints(e);
            has_vertex[col][u] = true;
            has_vertex[col][v] = true;
        }
        ClassViews { masks, has_vertex }
    }

    fn lambda(&self, g: &Graph, color: usize, u: usize, v: usize) -> usize {
        if !self.has_vertex[color][u] || !self.has_vertex[color][v] {
            return 0;
        }
        connectivity::lambda_masked(g, Some(&self.masks[color]), u, v)
    }

    fn counts(&self, g: &Graph, u: usize, v: usize) -> PathCounts {
        let per_color: Vec<usize> = (0..self.masks.len())
            .map(|i| self.lambda(g, i, u, v))
            .collect();
        let total = per_color.iter().sum();
        PathCounts { per_color, total }
    }
}

/// Maximum number of pairwise edge-disjoint monochromatic u-v paths, broken
/// down by color. A vertex absent from a class contributes 0 for that class.
pub fn count_monochromatic_paths(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Result<PathCounts> {
    check_coloring(g, c)?;
    if u == v {
        return Err(Error::InvalidInput(format!("u = v = {u}")));
    }
    if u >= g.n() || v >= g.n() {
        return Err(Error::InvalidInput("vertex out of range".into()));
    }
    Ok(ClassViews::build(g, c).counts(g, u, v))
}

fn verify(
    g: &Graph,
    c: &EdgeColoring,
    k: usize,
    mode: Mode,
    with_summaries: bool,
) -> Result<VerificationReport> {
    check_coloring(g, c)?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    let views = ClassViews::build(g, c);
    let t = c.num_colors();
    let mut summaries = Vec::new();
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let pair_ok = if with_summaries {
                let counts = views.counts(g, u, v);
                let ok = match mode {
                    Mode::Mc => counts.total >= k,
                    Mode::Umc => counts.per_color.iter().any(|&f| f >= k),
                };
                if ok {
                    summaries.push(PairSummary {
                        pair: (u, v),
                        per_color: counts.per_color,
                        total: counts.total,
                    });
                }
                ok
            } else {
                // early exit per pair: stop as soon as the pair is satisfied
                match mode {
                    Mode::Mc => {
                        let mut sum = 0;
                        let mut ok = false;
                        for i in 0..t {
                            sum += views.lambda(g, i, u, v);
                            if sum >= k {
                                ok = true;
                                break;
                            }
                        }
                        ok
                    }
                    Mode::Umc => (0..t).any(|i| views.lambda(g, i, u, v) >= k),
                }
            };
            if !pair_ok {
                // recompute the full per-color vector for the witness
                let counts = views.counts(g, u, v);
                return Ok(VerificationReport {
                    mode,
                    k,
                    pass: false,
                    witness: Some(FailureWitness {
                        pair: (u, v),
                        per_color: counts.per_color,
                        total: counts.total,
                    }),
                    pair_summaries: None,
                });
            }
        }
    }
    Ok(VerificationReport {
        mode,
        k,
        pass: true,
        witness: None,
        pair_summaries: with_summaries.then_some(summaries),
    })
}

/// Does `c` make `g` monochromatic k-edge-connected: every vertex pair joined
/// by at least k pairwise edge-disjoint monochromatic paths, colors free to
/// differ across the k paths? Pairs are checked in lexicographic order and
/// the first failure is reported.
pub fn is_mc_k(g: &Graph, c: &EdgeColoring, k: usize) -> Result<VerificationReport> {
    verify(g, c, k, Mode::Mc, false)
}

/// Uniform variant: for each pair some single color must supply all k paths
/// (the color may differ from pair to pair).
pub fn is_umc_k(g: &Graph, c: &EdgeColoring, k: usize) -> Result<VerificationReport> {
    verify(g, c, k, Mode::Umc, false)
}

/// As [`is_mc_k`], also collecting per-pair path counts on success.
pub fn is_mc_k_detailed(g: &Graph, c: &EdgeColoring, k: usize) -> Result<VerificationReport> {
    verify(g, c, k, Mode::Mc, true)
}

/// As [`is_umc_k`], also collecting per-pair path counts on success.
pub fn is_umc_k_detailed(g: &Graph, c: &EdgeColoring, k: usize) -> Result<VerificationReport> {
    verify(g, c, k, Mode::Umc, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    /// K_4 with the Hamiltonian cycle 0-1-2-3-0 in color 0 and the two
    /// chords in their own colors.
    fn k4_three_colors() -> (Graph, EdgeColoring) {
        let g = generate::complete(4);
        let mut raw = vec![usize::MAX; 6];
        for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
            raw[g.edge_index(u, v).unwrap()] = 0;
        }
        raw[g.edge_index(0, 2).unwrap()] = 1;
        raw[g.edge_index(1, 3).unwrap()] = 2;
        (g, EdgeColoring::new(&raw))
    }

    #[test]
    fn normalization_by_first_occurrence() {
        let c = EdgeColoring::new(&[5, 5, 2, 5, 9]);
        assert_eq!(c.assignment(), &[0, 0, 1, 0, 2]);
        assert_eq!(c.num_colors(), 3);
        assert!(EdgeColoring::is_normalized(&[0, 0, 1, 0, 2]));
        assert!(!EdgeColoring::is_normalized(&[0, 2, 1]));
        assert!(!EdgeColoring::is_normalized(&[1, 0]));
    }

    #[test]
    fn classes_partition_edges() {
        let g = generate::complete(4);
        let mono = color_classes(&g, &EdgeColoring::monochromatic(6)).unwrap();
        assert_eq!(mono.len(), 1);
        assert_eq!(mono[0].edges.len(), 6);
        assert!(!mono[0].trivial);

        let rain = color_classes(&g, &EdgeColoring::rainbow(6)).unwrap();
        assert_eq!(rain.len(), 6);
        assert!(rain.iter().all(|c| c.trivial));

        let c4 = generate::cycle(4).unwrap();
        let two = color_classes(&c4, &EdgeColoring::new(&[0, 0, 1, 1])).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].edges, vec![0, 1]);
        assert_eq!(two[1].edges, vec![2, 3]);

        assert!(color_classes(&c4, &EdgeColoring::monochromatic(3)).is_err());
    }

    #[test]
    fn path_count_examples() {
        let c4 = generate::cycle(4).unwrap();
        let counts = count_monochromatic_paths(&c4, &EdgeColoring::monochromatic(4), 0, 2).unwrap();
        assert_eq!(counts.total, 2);

        let (g, c) = k4_three_colors();
        let counts = count_monochromatic_paths(&g, &c, 0, 2).unwrap();
        assert_eq!(counts.per_color, vec![2, 1, 0]);
        assert_eq!(counts.total, 3);

        let rainbow = EdgeColoring::rainbow(6);
        let counts = count_monochromatic_paths(&g, &rainbow, 0, 1).unwrap();
        assert_eq!(counts.total, 1);

        assert!(count_monochromatic_paths(&g, &c, 2, 2).is_err());
    }

    #[test]
    fn mc_verifier_examples() {
        let (g, c) = k4_three_colors();
        assert!(is_mc_k(&g, &c, 2).unwrap().pass);

        let report = is_mc_k(&g, &EdgeColoring::rainbow(6), 2).unwrap();
        assert!(!report.pass);
        let w = report.witness.unwrap();
        assert_eq!(w.pair, (0, 1));
        assert_eq!(w.total, 1);

        let c5 = generate::cycle(5).unwrap();
        assert!(
            is_mc_k(&c5, &EdgeColoring::monochromatic(5), 2)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn umc_verifier_examples() {
        let (g, c) = k4_three_colors();
        assert!(is_umc_k(&g, &c, 2).unwrap().pass);

        let report = is_umc_k(&g, &c, 3).unwrap();
        assert!(!report.pass);
        let w = report.witness.unwrap();
        assert!(w.per_color.iter().all(|&f| f < 3));

        // monochromatic coloring of a k-edge-connected graph passes for that k
        let k5 = generate::complete(5);
        assert!(
            is_umc_k(&k5, &EdgeColoring::monochromatic(10), 4)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn rainbow_mc1_iff_complete() {
        let k4 = generate::complete(4);
        assert!(is_mc_k(&k4, &EdgeColoring::rainbow(6), 1).unwrap().pass);

        let c5 = generate::cycle(5).unwrap();
        assert!(!is_mc_k(&c5, &EdgeColoring::rainbow(5), 1).unwrap().pass);
    }

    #[test]
    fn failure_witness_recomputes() {
        let (g, c) = k4_three_colors();
        let report = is_umc_k(&g, &c, 3).unwrap();
        let w = report.witness.unwrap();
        let counts = count_monochromatic_paths(&g, &c, w.pair.0, w.pair.1).unwrap();
        assert_eq!(counts.per_color, w.per_color);
        assert_eq!(counts.total, w.total);
    }

    #[test]
    fn detailed_reports_collect_all_pairs() {
        let (g, c) = k4_three_colors();
        let report = is_mc_k_detailed(&g, &c, 2).unwrap();
        assert!(report.pass);
        assert_eq!(report.pair_summaries.unwrap().len(), 6);
    }
}
