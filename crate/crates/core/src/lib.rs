//! Noncrossing arc diagrams, weak-order congruences and shards for Coxeter
//! groups of types A and B.

pub mod arcs_a;
pub mod arcs_b;
pub mod catalog;
pub mod error;
pub mod forcing;
pub mod lattice;
pub mod pointset;
pub mod render;
pub mod shards;
pub mod verify;
pub mod weak;

pub use error::{Error, Result};
