//! Exact induced matching and edge open packing numbers for graphs and
//! graph products.

pub mod bitset;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod products;
pub mod trees;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use graph::Graph;
