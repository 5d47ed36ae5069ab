//! Exact tools for independent domination in graphs of maximum degree
//! three: solvers, a canonical labeler, exhaustive generators, structured
//! graph families, and recognizers for the structures that drive the
//! weight-based accounting.

pub mod codec;
pub mod enumeration;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod random;
pub mod recognition;
pub mod solver;

pub use graph::{GraphError, SubcubicGraph, VertexSet};
