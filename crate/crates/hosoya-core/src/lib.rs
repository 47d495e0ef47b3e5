//! Exact computation of Hosoya polynomials and the distance indices derived
//! from them (Wiener, hyper-Wiener) for connected graphs.
//!
//! The crate offers three independent computation paths that can be
//! cross-checked against each other:
//!
//! * [`graph::hosoya_bruteforce`] — BFS from every vertex; the oracle.
//! * [`decomp::hosoya_via_decomposition`] — splits the graph at its cut
//!   vertices into primary subgraphs (blocks by default) and combines their
//!   Hosoya and partial Hosoya polynomials, touching each block once.
//! * [`construct`] / [`chem`] — closed formulas for bouquets, circuits,
//!   chains and links of graphs, and for the chemical families built from
//!   them (spiro-chains, polyphenylenes, nanostar dendrimers, triangulanes).
//!
//! All arithmetic is exact; polynomial coefficients and indices are
//! arbitrary-precision integers.

#![forbid(unsafe_code)]

pub mod chem;
pub mod construct;
pub mod decomp;
pub mod graph;
pub mod poly;

pub use graph::Graph;
pub use poly::{IndexReport, Method, Polynomial};
