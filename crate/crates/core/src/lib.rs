//! Broadcast domination, multipacking and related parameters on graphs.

pub mod bitset;
pub mod chordal;
pub mod error;
pub mod farber;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod lp;
pub mod matrix;
pub mod treemp;

pub use error::{Error, Result};
pub use graph::{Broadcast, DistanceMatrix, Graph, LabeledGraph, Multipacking};
