//! Cross-checks of the fast implementations against brute-force oracles.

mod support;

use mckec::coloring::EdgeColoring;
use mckec::connectivity::{is_k_edge_connected, local_edge_connectivity};
use mckec::generate;
use mckec::graph::Graph;
use mckec::kecss::{minimalize, minimum_kecss, KecssBudget};
use mckec::search::{exact_mc_k, exact_umc_k, SearchBudget};
use mckec::tree_packing::tree_packing_number;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn seeded_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        if edges.len() <= max_m {
            return Graph::new(n, edges).unwrap();
        }
    }
}

#[test]
fn flow_matches_path_enumeration_exhaustively() {
    // every graph with at most 9 edges on up to 5 vertices, every pair
    for n in 2..=5 {
        for g in generate::all_graphs(n) {
            if g.m() > 9 {
                continue;
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    assert_eq!(
                        local_edge_connectivity(&g, u, v).unwrap(),
                        support::lambda_by_paths(&g, u, v),
                        "graph {:?}",
                        g.edges()
                    );
                }
            }
        }
    }
}

#[test]
fn flow_matches_path_enumeration_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(271828);
    for _ in 0..150 {
        let n = rng.gen_range(4..=6);
        let g = seeded_graph(&mut rng, n, 9);
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        assert_eq!(
            local_edge_connectivity(&g, u, v).unwrap(),
            support::lambda_by_paths(&g, u, v),
            "graph {:?} pair ({u},{v})",
            g.edges()
        );
    }
}

#[test]
fn monochromatic_counts_match_path_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(314159);
    for _ in 0..120 {
        let n = rng.gen_range(4..=6);
        let g = seeded_graph(&mut rng, n, 8);
        if g.m() == 0 {
            continue;
        }
        let t = rng.gen_range(1..=3usize);
        let raw: Vec<usize> = (0..g.m()).map(|_| rng.gen_range(0..t)).collect();
        let c = EdgeColoring::new(&raw);
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let counts = mckec::coloring::count_monochromatic_paths(&g, &c, u, v).unwrap();
        assert_eq!(
            counts.total,
            support::monochromatic_max_by_paths(&g, &c, u, v),
            "graph {:?} coloring {:?} pair ({u},{v})",
            g.edges(),
            c.assignment()
        );
    }
}

/// The search restricts itself to partitions with connected blocks; the
/// oracle searches every partition. Exhaustive over all 2-edge-connected
/// graphs with at most 8 edges on up to 5 vertices.
#[test]
fn connected_class_restriction_is_lossless_k2() {
    let budget = SearchBudget::default();
    let graphs: Vec<Graph> = support::kec_corpus_up_to(5, 2)
        .into_iter()
        .filter(|g| g.m() <= 8)
        .collect();
    assert!(graphs.len() > 100);
    for g in &graphs {
        let fast = exact_mc_k(g, 2, budget).unwrap();
        assert!(fast.exact);
        assert_eq!(
            fast.value,
            support::max_colors_all_partitions(g, 2, false),
            "mc_2 mismatch on {:?}",
            g.edges()
        );
        let fast = exact_umc_k(g, 2, budget).unwrap();
        assert_eq!(
            fast.value,
            support::max_colors_all_partitions(g, 2, true),
            "umc_2 mismatch on {:?}",
            g.edges()
        );
    }
}

#[test]
fn connected_class_restriction_is_lossless_k3() {
    let budget = SearchBudget::default();
    let graphs: Vec<Graph> = support::kec_corpus_up_to(5, 3)
        .into_iter()
        .filter(|g| g.m() <= 8)
        .collect();
    assert!(!graphs.is_empty());
    for g in &graphs {
        let fast = exact_mc_k(g, 3, budget).unwrap();
        assert_eq!(fast.value, support::max_colors_all_partitions(g, 3, false));
        let fast = exact_umc_k(g, 3, budget).unwrap();
        assert_eq!(fast.value, support::max_colors_all_partitions(g, 3, true));
    }
}

#[test]
fn branch_and_bound_matches_subset_enumeration() {
    let budget = KecssBudget::default();
    let mut cases: Vec<(Graph, usize)> = Vec::new();
    for g in support::all_kec_graphs(4, 2) {
        cases.push((g, 2));
    }
    for g in support::all_kec_graphs(4, 3) {
        cases.push((g, 3));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    let n5: Vec<Graph> = support::all_kec_graphs(5, 2);
    for g in n5.choose_multiple(&mut rng, 40) {
        cases.push((g.clone(), 2));
    }
    cases.push((generate::petersen(), 2));
    cases.push((generate::complete_bipartite(3, 3), 3));
    for (g, k) in &cases {
        let fast = minimum_kecss(g, *k, budget).unwrap();
        let slow = support::min_kecss_by_enumeration(g, *k).unwrap();
        assert_eq!(
            fast.edges,
            slow,
            "k={k} mismatch on {:?} (sizes {} vs {})",
            g.edges(),
            fast.size,
            slow.len()
        );
    }
}

/// Removing any set of chords of a 2-edge-connected subgraph H (edges with
/// both ends in V(H) but outside E(H)) keeps the host 2-edge-connected.
#[test]
fn chord_removal_preserves_two_edge_connectivity() {
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 5 + (seed % 4) as usize;
        let g = generate::random_kec(n, 2, seed).unwrap();

        // H: a cycle through some edge e = (u,v): e plus a shortest
        // alternative u-v path avoiding e
        let e0 = rng.gen_range(0..g.m());
        let (u, v) = g.endpoints(e0);
        let mut keep = vec![true; g.m()];
        keep[e0] = false;
        let rest = g.spanning_subgraph(&keep);
        let path = bfs_path(&rest, u, v).expect("2-edge-connected graphs have a second path");
        let mut h_vertices = vec![false; g.n()];
        let mut h_edges = vec![false; g.m()];
        h_edges[e0] = true;
        h_vertices[u] = true;
        h_vertices[v] = true;
        for w in &path {
            h_vertices[*w] = true;
        }
        for win in path.windows(2) {
            h_edges[g.edge_index(win[0], win[1]).unwrap()] = true;
        }

        // S: a random subset of chords
        let mut keep = vec![true; g.m()];
        let mut removed = 0;
        for e in 0..g.m() {
            let (a, b) = g.endpoints(e);
            if !h_edges[e] && h_vertices[a] && h_vertices[b] && rng.gen_bool(0.5) {
                keep[e] = false;
                removed += 1;
            }
        }
        let pruned = g.spanning_subgraph(&keep);
        assert!(
            is_k_edge_connected(&pruned, 2),
            "seed {seed}: removed {removed} chords and lost 2-edge-connectivity"
        );
    }
}

fn bfs_path(g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([u]);
    parent[u] = u;
    while let Some(x) = queue.pop_front() {
        if x == v {
            let mut path = vec![v];
            let mut cur = v;
            while cur != u {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &(w, _) in g.neighbors(x) {
            if parent[w] == usize::MAX {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Constructed colorings are feasible, so their color counts can never
/// exceed the exhaustively computed optimum.
#[test]
fn construction_counts_never_exceed_exact_values() {
    let budget = SearchBudget::default();

    // single Hamiltonian cycle color on K_3 at k = 2
    let (g, d) = mckec::constructions::decompose_complete_odd(1).unwrap();
    let c = d.to_coloring(&g);
    assert!(c.num_colors() <= exact_mc_k(&g, 2, budget).unwrap().value);

    // two cycle colors on K_5 at k = 4: meets the optimum exactly
    let (g, d) = mckec::constructions::decompose_complete_odd(2).unwrap();
    let c = d.to_coloring(&g);
    let best = exact_mc_k(&g, 4, budget).unwrap();
    assert!(best.exact);
    assert_eq!(c.num_colors(), best.value);

    // tree-packing coloring on K_4 at k = 2
    let k4 = generate::complete(4);
    let c = mckec::tree_packing::packing_coloring(&k4, 2).unwrap();
    assert!(c.num_colors() <= exact_mc_k(&k4, 2, budget).unwrap().value);

    // single-class coloring over a minimum core: e - e(H) + 1 colors, which
    // equals the uniform optimum and bounds the free one
    let h = minimum_kecss(&k4, 2, KecssBudget::default()).unwrap();
    let c = mckec::constructions::single_class_umc_coloring(&k4, 2, &h).unwrap();
    let umc = exact_umc_k(&k4, 2, budget).unwrap();
    assert_eq!(c.num_colors(), umc.value);
    assert!(umc.value <= exact_mc_k(&k4, 2, budget).unwrap().value);
}

#[test]
fn packing_equals_psi_floor_up_to_n8() {
    let mut graphs = vec![
        generate::complete(8),
        generate::complete_bipartite(4, 4),
        generate::complete_bipartite(3, 5),
    ];
    for seed in 0..40u64 {
        graphs.push(generate::random_connected(8, 0.55, seed).unwrap());
    }
    for g in &graphs {
        let (k, packing) = mckec::tree_packing::tree_packing_number(g).unwrap();
        packing.validate(g).unwrap();
        let psi = mckec::tree_packing::psi_oracle(g, Default::default()).unwrap();
        assert_eq!(k as u64, psi.psi_floor, "n={} m={}", g.n(), g.m());
    }
}

#[test]
fn packing_number_monotone_under_edge_addition() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for _ in 0..30 {
        let n = rng.gen_range(4..=6);
        let g = generate::random_connected(n, 0.6, rng.gen()).unwrap();
        let (base, _) = tree_packing_number(&g).unwrap();
        // add one absent edge, if any
        let absent: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect();
        if let Some(&(a, b)) = absent.first() {
            let mut edges = g.edges().to_vec();
            edges.push((a, b));
            let bigger = Graph::new(n, edges).unwrap();
            let (more, _) = tree_packing_number(&bigger).unwrap();
            assert!(more >= base);
        }
    }
}

#[test]
fn minimalize_bounds_and_mader_on_random_graphs() {
    for seed in 0..40u64 {
        let n = 5 + (seed % 3) as usize;
        let k = 2 + (seed % 2) as usize;
        let g = match generate::random_kec(n, k, seed) {
            Ok(g) => g,
            Err(_) => continue,
        };
        let minimal = minimalize(&g, k).unwrap();
        assert!(minimal.validate(&g));
        // no deletable edge remains
        let keep: Vec<bool> = (0..g.m()).map(|e| minimal.edges.contains(&e)).collect();
        let sub = g.spanning_subgraph(&keep);
        for e in 0..sub.m() {
            assert!(!mckec::kecss::is_deletable(&sub, e, k).unwrap());
        }
        let report = mckec::kecss::mader_checks(&sub, k).unwrap();
        assert!(report.is_minimal, "minimalize output must be minimal");
        assert!(report.first_violation.is_none());

        if g.m() <= KecssBudget::default().max_edges {
            let exact = minimum_kecss(&g, k, KecssBudget::default()).unwrap();
            assert!(exact.size <= minimal.size);
            assert!(minimal.size <= k * (g.n() - 1));
            assert!(2 * exact.size >= k * g.n());
        }
    }
}
