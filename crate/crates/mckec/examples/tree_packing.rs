//! Spanning-tree packings and the partition ratio psi, two routes to the
//! same number, plus the coloring a packing induces.
//!
//! ```bash
//! cargo run -p mckec --example tree_packing
//! ```

use mckec::coloring::is_mc_k;
use mckec::generate;
use mckec::tree_packing::{packing_coloring, psi_oracle, tree_packing_number, PsiBudget};

fn main() {
    for (name, g) in [
        ("C_5", generate::cycle(5).unwrap()),
        ("K_4", generate::complete(4)),
        ("K_6", generate::complete(6)),
        ("Petersen", generate::petersen()),
    ] {
        let (k, packing) = tree_packing_number(&g).unwrap();
        let psi = psi_oracle(&g, PsiBudget::default()).unwrap();
        println!(
            "{name:9} packs {k} spanning trees; psi = {} (floor {}), witness has {} blocks",
            psi.psi,
            psi.psi_floor,
            psi.witness.len()
        );
        for (i, tree) in packing.trees.iter().enumerate() {
            println!("  tree {i}: {tree:?}");
        }
    }

    // color tree i with color i, every leftover edge its own color:
    // e(G) - k(n-2) colors, and k monochromatic paths per pair
    let k6 = generate::complete(6);
    for k in [2, 3] {
        let c = packing_coloring(&k6, k).unwrap();
        let pass = is_mc_k(&k6, &c, k).unwrap().pass;
        println!(
            "K_6 packing coloring, k = {k}: {} colors, MC_{k} pass = {pass}",
            c.num_colors()
        );
    }
}
