//! Parsing and emitting graphs: graph6 lines and plain edge lists.
//!
//! ```bash
//! cargo run -p mckec --example graph_formats
//! ```

use mckec::format::{encode_graph6, format_edge_list, parse_edge_list, parse_graph6};
use mckec::generate;

fn main() {
    // decode a few graph6 strings
    for s in ["Bw", "C~", "A_", "Dhc"] {
        let g = parse_graph6(s).unwrap();
        println!(
            "{s:4} -> n = {}, m = {:2}, edges = {:?}",
            g.n(),
            g.m(),
            g.edges()
        );
    }

    // encode generated families
    for (name, g) in [
        ("K_5", generate::complete(5)),
        ("K_{3,3}", generate::complete_bipartite(3, 3)),
        ("C_7", generate::cycle(7).unwrap()),
        ("Petersen", generate::petersen()),
    ] {
        println!("{name:10} -> {}", encode_graph6(&g));
    }

    // the edge-list format preserves edge order exactly, which is what a
    // coloring file indexes into
    let g = generate::complete_bipartite(2, 3);
    let text = format_edge_list(&g);
    print!("\nK_{{2,3}} as an edge list:\n{text}");
    let back = parse_edge_list(&text).unwrap();
    assert_eq!(back, g);

    // malformed input errors carry byte offsets
    println!("\nerror examples:");
    for bad in ["Bww", "C"] {
        println!("  {bad:4}: {}", parse_graph6(bad).unwrap_err());
    }
}
