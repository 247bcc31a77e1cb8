//! Spectral analysis of chain graphs.
//!
//! Chain graphs are the bipartite graphs whose neighborhoods inside each
//! color class are nested. This crate builds them from their cell
//! partitions, computes floating-point spectra with an in-crate Jacobi
//! solver and exact eigenvalue multiplicities over ℚ(√5), classifies downer
//! vertices, and searches for vertices whose deletion keeps a nonzero
//! eigenvalue.

pub mod cli;
pub mod config;
pub mod exact;
pub mod graph;
pub mod search;
pub mod spectra;
pub mod theorems;

pub use config::Tolerances;
