//! Zero forcing, failed zero forcing, forts, and well-failed graphs.

pub mod brute;
pub mod classify;
pub mod error;
pub mod families;
pub mod forcing;
pub mod forts;
pub mod graph;
pub mod graph6;
pub mod structure;
pub mod trees;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use forcing::{ClosureTrace, SearchLimit};
pub use graph::Graph;
pub use vertex_set::VertexSet;
