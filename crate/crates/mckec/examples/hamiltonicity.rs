//! Deciding Hamiltonicity through the uniform color count: a
//! 2-edge-connected graph is Hamiltonian exactly when umc_2 = e - n + 1,
//! i.e. when its minimum 2-edge-connected spanning subgraph is a single
//! spanning cycle.
//!
//! ```bash
//! cargo run -p mckec --example hamiltonicity
//! ```

use mckec::generate;
use mckec::harness::hamiltonicity_via_umc2;
use mckec::kecss::KecssBudget;

fn main() {
    for (name, g) in [
        ("K_4", generate::complete(4)),
        ("C_6", generate::cycle(6).unwrap()),
        ("K_{3,4}", generate::complete_bipartite(3, 4)),
        ("Petersen", generate::petersen()),
    ] {
        let r = hamiltonicity_via_umc2(&g, KecssBudget::default()).unwrap();
        println!("{name}:");
        println!(
            "  umc_2 = {} vs e - n + 1 = {} -> hamiltonian: {}",
            r.umc2, r.expected_if_hamiltonian, r.hamiltonian
        );
        println!(
            "  minimum 2-edge-connected spanning subgraph: {} edges",
            r.min_2ecss.size
        );
        match &r.direct_cycle {
            Some(cycle) => println!("  backtracking found: {cycle:?}"),
            None => println!("  backtracking found no Hamiltonian cycle"),
        }
        assert!(r.agree);
    }
}
