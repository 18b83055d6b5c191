//! Min-cut structure toolkit: cactus representations of all min-cuts,
//! the compact cactus for the non-trivial ones, the contraction-based
//! sparsifier derived from it, and explicit enumeration of every min-cut
//! as its crossing edge set.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion
//! CLI crate. Graphs are undirected multigraphs over dense vertex ids
//! `0..n`, immutable after construction.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cactus;
pub mod compact;
pub mod connectivity;
pub mod enumerate;
mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod sparsify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Cut, EdgeCut, MultiGraph};
pub use vertex_set::VertexSet;
