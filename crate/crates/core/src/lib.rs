//! Binomial edge ideals of graphs: connected domination, closed labelings,
//! Gröbner bases over the rationals, and exact v-number computation.

pub mod bei;
pub mod catalog;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod oracle;
pub mod polyring;
pub mod report;
pub mod structure;
pub mod verify;

pub use error::{Error, GraphError, Result};
pub use graph::{Graph, Vertex, VertexSet};
