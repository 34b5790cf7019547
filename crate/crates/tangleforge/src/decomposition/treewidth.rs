//! Exact treewidth for small graphs by branch-and-bound over elimination
//! orders, with a decomposition reconstructed from the best order.

use super::td::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VSet;
use std::collections::HashSet;

pub const TREEWIDTH_CAP: usize = 25;

/// Exact treewidth and a witnessing tree-decomposition; errors above the
/// vertex cap.
pub fn treewidth_exact_small(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n > TREEWIDTH_CAP {
        return Err(Error::Budget(format!("treewidth search capped at {TREEWIDTH_CAP} vertices")));
    }
    if n == 0 {
        return Err(Error::Invalid("empty graph".into()));
    }
    for width in 0..n {
        let mut dead: HashSet<u32> = HashSet::new();
        let mut order = Vec::new();
        if eliminate(g, width, 0, &mut vec![false; n], &mut order, &mut dead) {
            let td = td_from_elimination(g, &order).simplify();
            super::td::validate_td(g, &td)?;
            debug_assert_eq!(td.width(), width);
            return Ok((width, td));
        }
    }
    unreachable!("every graph admits an elimination of width n-1")
}

/// Degree of v in the fill graph after eliminating `gone`: neighbors are the
/// vertices reachable from v through eliminated vertices only.
fn fill_degree(g: &Graph, gone: &[bool], v: usize) -> usize {
    fill_neighbors(g, gone, v).len()
}

fn fill_neighbors(g: &Graph, gone: &[bool], v: usize) -> VSet {
    let mut reach = VSet::empty(g.n());
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if gone[w] {
                stack.push(w);
            } else {
                reach.insert(w);
            }
        }
    }
    reach
}

fn eliminate(
    g: &Graph,
    width: usize,
    done: usize,
    gone: &mut Vec<bool>,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u32>,
) -> bool {
    let n = g.n();
    if done == n {
        return true;
    }
    let key: u32 = (0..n).filter(|&v| gone[v]).fold(0, |m, v| m | 1 << v);
    if dead.contains(&key) {
        return false;
    }
    for v in 0..n {
        if gone[v] || fill_degree(g, gone, v) > width {
            continue;
        }
        gone[v] = true;
        order.push(v);
        if eliminate(g, width, done + 1, gone, order, dead) {
            return true;
        }
        order.pop();
        gone[v] = false;
    }
    dead.insert(key);
    false
}

/// Standard reconstruction: the bag of v is v plus its fill neighbors at
/// elimination time; each bag attaches to the bag of the earliest-eliminated
/// fill neighbor.
fn td_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut gone = vec![false; n];
    let mut bags = Vec::new();
    let mut nbrs: Vec<VSet> = Vec::new();
    for &v in order {
        let nb = fill_neighbors(g, &gone, v);
        let mut bag = nb.clone();
        bag.insert(v);
        bags.push(bag);
        nbrs.push(nb);
        gone[v] = true;
    }
    let mut tree_edges = Vec::new();
    let mut roots = Vec::new();
    for (i, nb) in nbrs.iter().enumerate() {
        match nb.iter().min_by_key(|&u| pos[u]) {
            Some(u) => tree_edges.push((i, pos[u])),
            // One root per connected component; chain them so the result is
            // a tree even for disconnected hosts.
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        tree_edges.push((w[0], w[1]));
    }
    TreeDecomposition { host_n: n, bags, tree_edges }
}
