//! Edge connectivity with certificates: path counts, violating cuts,
//! biconnected blocks.
//!
//! ```bash
//! cargo run -p mckec --example connectivity
//! ```

use mckec::connectivity::{
    is_k_edge_connected_certified, local_edge_connectivity, local_edge_connectivity_certified,
};
use mckec::generate::{self, CactusPart};
use mckec::graph::blocks;

fn main() {
    let k4 = generate::complete(4);
    println!(
        "K_4: lambda(0,3) = {}",
        local_edge_connectivity(&k4, 0, 3).unwrap()
    );

    let c5 = generate::cycle(5).unwrap();
    let (lambda, cut) = local_edge_connectivity_certified(&c5, 0, 2).unwrap();
    println!(
        "C_5: lambda(0,2) = {lambda}, cut edges {:?} with side {:?}",
        cut.cut_edges, cut.side
    );

    // a 4-cycle is 2- but not 3-edge-connected; the certificate names a cut
    let c4 = generate::cycle(4).unwrap();
    for k in [2, 3] {
        let check = is_k_edge_connected_certified(&c4, k);
        match check.certificate {
            None => println!("C_4 is {k}-edge-connected: {}", check.holds),
            Some(cut) => println!(
                "C_4 is {k}-edge-connected: {} (cut of size {}: {:?})",
                check.holds,
                cut.cut_edges.len(),
                cut.cut_edges
            ),
        }
    }

    // blocks of a cactus: each cycle is one block
    let g = generate::cactus(&[
        CactusPart::Cycle { attach: 0, len: 4 },
        CactusPart::Cycle { attach: 0, len: 4 },
        CactusPart::Bridge { attach: 3 },
    ])
    .unwrap();
    println!(
        "cactus on {} vertices, {} edges, blocks: {:?}",
        g.n(),
        g.m(),
        blocks(&g).unwrap()
    );
}
