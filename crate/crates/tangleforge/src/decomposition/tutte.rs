//! Block-cut tree and the canonical decomposition along totally nested
//! separations of order at most two. Both are instances of the same recipe:
//! collect the tight proper separations up to the order bound, keep those
//! nested with every other such separation, and build the tree-decomposition
//! of the resulting nested family.

use super::nested::td_from_nested_family;
use super::td::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{enumerate_tight_separations, nested, Separation};

fn totally_nested(pool: &[Separation]) -> Vec<Separation> {
    pool.iter()
        .filter(|a| pool.iter().all(|b| nested(a, b)))
        .cloned()
        .collect()
}

fn td_along_order(g: &Graph, max_order: usize) -> Result<TreeDecomposition> {
    if !g.is_connected() {
        return Err(Error::Invalid("decomposition needs a connected graph".into()));
    }
    let pool = enumerate_tight_separations(g, max_order)?;
    let family = totally_nested(&pool);
    td_from_nested_family(g, &family)
}

/// Decomposition along cut vertices: bags are the blocks, with a hub bag {c}
/// at any cut vertex where at least three sides meet.
pub fn block_cut_tree(g: &Graph) -> Result<TreeDecomposition> {
    td_along_order(g, 1)
}

/// Decomposition along totally nested separations of order at most two.
/// Torsos are 3-connected graphs, cycles or complete graphs on at most two
/// vertices; adhesion at most two; canonical by construction.
pub fn tutte_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    td_along_order(g, 2)
}
