//! Core library for analyzing right-angled presentation graphs: square
//! structure, thickness order, hypergraph index oracle, extremal edge
//! bounds, exploration processes on random graphs, and branching-process
//! numerics.

pub mod error;
pub mod explore;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod numerics;
pub mod oracle;
pub mod randlab;
pub mod thickness;
pub mod unionfind;
pub mod vertexset;

pub use error::{Error, Result};
pub use graph::{Graph, NonEdge};
pub use vertexset::VertexSet;
