//! Tree-decompositions and the decomposition pipelines: block-cut tree,
//! Tutte decomposition, tangle-distinguishing decompositions, refinement,
//! region stars, the quasi-4-connected pipeline and closed-walk generators.

mod distinguish;
mod nested;
mod pipeline;
mod td;
mod treewidth;
mod tutte;
mod walks;

pub use distinguish::{tangle_distinguishing_td, DistinguishReport};
pub use nested::td_from_nested_family;
pub use pipeline::{
    grohe_decomposition, grohe_region_star_td, refine_td, region_star_td,
    structure_decomposition, StructureReport, TorsoReport,
};
pub use td::{edge_separation, validate_td, TdReport, TreeDecomposition};
pub use treewidth::{treewidth_exact_small, TREEWIDTH_CAP};
pub use tutte::{block_cut_tree, tutte_decomposition};
pub use walks::{closed_walk_generators, Walk};
