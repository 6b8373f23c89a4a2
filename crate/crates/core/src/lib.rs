//! Exact domination, certified domination and upper domination numbers of
//! small graphs, the 𝒫-corona construction, structural recognizers, and a
//! registry of checkable statements relating these invariants.
//!
//! Graphs have at most 64 vertices; every neighborhood is one machine word.
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod bitset;
pub mod corona;
pub mod domination;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod structure;
pub mod theorems;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use domination::{InvariantKind, InvariantResult};
pub use graph::{Graph, GraphError};
