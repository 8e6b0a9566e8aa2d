//! Minimum vs. minimal k-edge-connected spanning subgraphs, and the
//! minimality property report.
//!
//! ```bash
//! cargo run -p mckec --example min_kecss
//! ```

use mckec::generate;
use mckec::kecss::{is_deletable, mader_checks, minimalize, minimum_kecss, KecssBudget};

fn main() {
    let k4 = generate::complete(4);
    println!("K_4, k = 2:");
    println!("  edge 0 deletable: {}", is_deletable(&k4, 0, 2).unwrap());
    let greedy = minimalize(&k4, 2).unwrap();
    println!(
        "  greedy minimal: {:?} ({} edges)",
        greedy.edges, greedy.size
    );
    let exact = minimum_kecss(&k4, 2, KecssBudget::default()).unwrap();
    println!("  exact minimum: {:?} ({} edges)", exact.edges, exact.size);

    // the Petersen graph is not Hamiltonian, so its minimum 2-edge-connected
    // spanning subgraph needs 11 edges, one more than a Hamiltonian cycle
    let p = generate::petersen();
    let exact = minimum_kecss(&p, 2, KecssBudget::default()).unwrap();
    println!(
        "\nPetersen, k = 2: minimum size = {} (of {})",
        exact.size,
        p.m()
    );

    // K_{3,3} is minimally 3-edge-connected: the report certifies the edge
    // bound, a degree-3 vertex, and a 3-edge cut through every edge
    let k33 = generate::complete_bipartite(3, 3);
    let report = mader_checks(&k33, 3).unwrap();
    println!("\nK_{{3,3}}, k = 3:");
    println!("  minimal: {}", report.is_minimal);
    println!("  e <= k(n-1): {}", report.edge_bound_holds);
    println!("  degree-3 vertex: {:?}", report.degree_k_vertex);
    println!("  cut through edge 0: {:?}", report.edge_cuts[0].cut_edges);
}
