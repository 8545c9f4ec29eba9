//! Matching covered graphs: bricks, braces, removable edges and
//! doubletons, near-bipartite bricks and tri-ladders.

pub mod cli;
pub mod error;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod nearbip;
pub mod structure;
pub mod triladder;

pub use error::{Error, Result};
pub use graph::{EdgeId, Multigraph, VertexSet};
