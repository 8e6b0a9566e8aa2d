//! Monochromatic k-edge-connection colorings of small graphs.
//!
//! An edge-colored graph is monochromatic k-edge-connected (MC_k) when every
//! vertex pair is joined by at least k pairwise edge-disjoint monochromatic
//! paths; it is uniformly so (UMC_k) when, pair by pair, some single color
//! supplies all k paths. This crate provides:
//!
//! - graph plumbing: graph6 / edge-list formats, families, seeded instances
//!   ([`graph`], [`format`], [`generate`]);
//! - edge-connectivity primitives with cut certificates ([`connectivity`]);
//! - the MC_k / UMC_k verifiers ([`coloring`]);
//! - minimum and minimal k-edge-connected spanning subgraphs, deletable-edge
//!   tests, and minimality property checks ([`kecss`]);
//! - spanning-tree packings and the partition ratio ψ ([`tree_packing`]);
//! - explicit Hamiltonian-decomposition colorings ([`constructions`]);
//! - exact mc_k / umc_k by exhaustive partition search ([`search`]);
//! - a sweep harness comparing exact values against the closed-form
//!   predictions over graph corpora ([`harness`]).
//!
//! Everything is exact, deterministic, and sized for desk-scale graphs.
//! Start with the `examples/` directory: each file is a runnable tour of one
//! capability.

pub mod coloring;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod kecss;
pub mod partitions;
pub mod search;
pub mod tree_packing;

pub use coloring::{EdgeColoring, VerificationReport};
pub use error::{Error, Result};
pub use graph::{CutCertificate, Graph, VertexPartition};
