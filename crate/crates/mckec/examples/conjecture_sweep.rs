//! Sweep every 2-edge-connected graph on up to 4 vertices: exact values
//! against the formula predictions, then the per-theorem checks.
//!
//! ```bash
//! cargo run -p mckec --example conjecture_sweep
//! ```

use mckec::connectivity::is_k_edge_connected;
use mckec::generate;
use mckec::graph::Graph;
use mckec::harness::{check_theorems, run_conjecture, HarnessBudget};

fn main() {
    let corpus: Vec<Graph> = (1..=4)
        .flat_map(generate::all_graphs)
        .filter(|g| is_k_edge_connected(g, 2))
        .collect();
    println!(
        "corpus: {} two-edge-connected graphs on <= 4 vertices",
        corpus.len()
    );

    let budget = HarnessBudget::default();
    let sweep = run_conjecture(&corpus, 2, budget).unwrap();
    println!(
        "k = 2 sweep: {} match, {} mismatch, {} inconclusive",
        sweep.summary.matches, sweep.summary.mismatches, sweep.summary.inconclusive
    );
    for r in sweep.records.iter().take(5) {
        println!(
            "  {:6} n={} m={} e(H)={} mc={} (formula {}) umc={} (formula {})",
            r.graph6, r.n, r.m, r.e_h, r.mc, r.formula_mc, r.umc, r.formula_umc
        );
    }
    println!("  ...");

    let report = check_theorems(&corpus, 2, budget).unwrap();
    let applied: usize = report
        .entries
        .iter()
        .flat_map(|e| &e.checks)
        .filter(|c| c.applicable)
        .count();
    println!(
        "theorem checks: {} applied across {} graphs, {} violations",
        applied,
        report.entries.len(),
        report.violations.len()
    );
    for v in &report.violations {
        println!("  VIOLATION {} on {}: {}", v.check, v.graph6, v.details);
    }
}
