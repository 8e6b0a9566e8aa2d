//! The MC_k / UMC_k verifiers on hand-built colorings of K_4.
//!
//! ```bash
//! cargo run -p mckec --example verify_coloring
//! ```

use mckec::coloring::{count_monochromatic_paths, is_mc_k, is_umc_k, EdgeColoring};
use mckec::generate;

fn main() {
    let k4 = generate::complete(4);

    // Hamiltonian cycle 0-1-2-3-0 in color 0, each chord its own color
    let mut raw = vec![0usize; 6];
    raw[k4.edge_index(0, 2).unwrap()] = 1;
    raw[k4.edge_index(1, 3).unwrap()] = 2;
    let c = EdgeColoring::new(&raw);
    println!("coloring: {:?} ({} colors)", c.assignment(), c.num_colors());

    let counts = count_monochromatic_paths(&k4, &c, 0, 2).unwrap();
    println!(
        "pair (0,2): per color {:?}, total {}",
        counts.per_color, counts.total
    );

    for k in [2, 3] {
        let mc = is_mc_k(&k4, &c, k).unwrap();
        let umc = is_umc_k(&k4, &c, k).unwrap();
        println!("k = {k}: MC pass = {}, UMC pass = {}", mc.pass, umc.pass);
        if let Some(w) = umc.witness {
            println!(
                "  UMC witness: pair {:?} has per-color counts {:?}",
                w.pair, w.per_color
            );
        }
    }

    // a rainbow coloring only ever provides single-edge paths
    let rainbow = EdgeColoring::rainbow(6);
    let report = is_mc_k(&k4, &rainbow, 2).unwrap();
    let w = report.witness.unwrap();
    println!(
        "rainbow at k = 2: pass = {}, first failing pair {:?} (total {})",
        report.pass, w.pair, w.total
    );
}
