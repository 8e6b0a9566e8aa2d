//! Exact mc_k and umc_k by exhaustive search over connected edge partitions,
//! plus the local improver.
//!
//! ```bash
//! cargo run -p mckec --example exact_search
//! ```

use mckec::coloring::EdgeColoring;
use mckec::generate;
use mckec::search::{exact_mc_k, exact_umc_k, improve_coloring, SearchBudget};

fn main() {
    let budget = SearchBudget::default();

    for (name, g, k) in [
        ("C_5", generate::cycle(5).unwrap(), 2usize),
        ("K_4", generate::complete(4), 2),
        ("K_5", generate::complete(5), 4),
        ("K_{3,3}", generate::complete_bipartite(3, 3), 3),
    ] {
        let mc = exact_mc_k(&g, k, budget).unwrap();
        let umc = exact_umc_k(&g, k, budget).unwrap();
        println!(
            "{name:8} k = {k}: mc = {} (witness {:?}), umc = {}, {} nodes explored",
            mc.value,
            mc.witness.assignment(),
            umc.value,
            mc.explored + umc.explored,
        );
    }

    // the improver splits disconnected classes: here the two chords of K_4
    // share a color but no vertex
    let k4 = generate::complete(4);
    let mut raw = vec![0usize; 6];
    raw[k4.edge_index(0, 2).unwrap()] = 1;
    raw[k4.edge_index(1, 3).unwrap()] = 1;
    let start = EdgeColoring::new(&raw);
    let improved = improve_coloring(&k4, &start, 2).unwrap();
    println!(
        "\nimprover on K_4: {} colors -> {} colors {:?}",
        start.num_colors(),
        improved.num_colors(),
        improved.assignment()
    );
}
