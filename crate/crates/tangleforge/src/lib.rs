//! tangleforge: finite-graph structural decompositions.
//!
//! Separations, tangles of order up to 4, crossedge contraction, and
//! (canonical) tree-decompositions with quasi-4-connected, planar, or small
//! torsos, together with the verification harnesses used by the test suite.

pub mod contraction;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod planarity;
pub mod separation;
pub mod symmetry;
pub mod tangle;
pub mod vset;

pub use error::{Error, Result};
