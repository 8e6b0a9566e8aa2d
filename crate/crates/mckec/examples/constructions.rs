//! Hamiltonian-cycle decompositions of complete and complete bipartite
//! graphs, and the extremal colorings they induce.
//!
//! ```bash
//! cargo run -p mckec --example constructions
//! ```

use mckec::coloring::{is_mc_k, is_umc_k};
use mckec::constructions::{
    decompose_bipartite, decompose_complete_even, decompose_complete_odd, kkn_mc_coloring,
    single_class_umc_coloring,
};
use mckec::generate;
use mckec::kecss::{minimum_kecss, KecssBudget};

fn main() {
    // K_7 = three edge-disjoint Hamiltonian cycles
    let (g, d) = decompose_complete_odd(3).unwrap();
    d.validate(&g).unwrap();
    println!("K_7 into {} Hamiltonian cycles:", d.parts.len());
    for part in &d.parts {
        println!("  {:?}: {:?}", part.kind, part.edges);
    }
    // used as a coloring, the cycles witness mc_6(K_7) >= 3
    let c = d.to_coloring(&g);
    println!(
        "  as a coloring: MC_6 pass = {}\n",
        is_mc_k(&g, &c, 6).unwrap().pass
    );

    // K_6 = two Hamiltonian cycles + a perfect matching
    let (g, d) = decompose_complete_even(2).unwrap();
    d.validate(&g).unwrap();
    let sizes: Vec<usize> = d.parts.iter().map(|p| p.edges.len()).collect();
    println!("K_6 part sizes: {sizes:?}");

    // K_{4,4} = two Hamiltonian cycles; K_{3,3} = one cycle + one matching
    let (g, d) = decompose_bipartite(2, false).unwrap();
    d.validate(&g).unwrap();
    println!("K_{{4,4}}: {} cycles", d.parts.len());
    let (g33, d33) = decompose_bipartite(1, true).unwrap();
    d33.validate(&g33).unwrap();
    println!("K_{{3,3}}: {} parts", d33.parts.len());

    // the k/2-color coloring of K_{k,n}
    let (g, c) = kkn_mc_coloring(4, 6).unwrap();
    println!(
        "\nK_{{4,6}} coloring: {} colors, MC_4 pass = {}",
        c.num_colors(),
        is_mc_k(&g, &c, 4).unwrap().pass
    );

    // one k-edge-connected class plus rainbow leftovers: e - e(H) + 1 colors
    let k5 = generate::complete(5);
    let h = minimum_kecss(&k5, 2, KecssBudget::default()).unwrap();
    let c = single_class_umc_coloring(&k5, 2, &h).unwrap();
    println!(
        "K_5 single-class coloring over a {}-edge core: {} colors, UMC_2 pass = {}",
        h.size,
        c.num_colors(),
        is_umc_k(&k5, &c, 2).unwrap().pass
    );
}
