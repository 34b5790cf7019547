//! The tree-decomposition type and its validator.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{is_degenerate, is_tight, Separation};
use crate::vset::VSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Number of vertices of the host graph.
    pub host_n: usize,
    pub bags: Vec<VSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// The one-bag decomposition.
    pub fn trivial(g: &Graph) -> TreeDecomposition {
        TreeDecomposition { host_n: g.n(), bags: vec![g.vertex_set()], tree_edges: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn adhesion(&self) -> usize {
        self.tree_edges
            .iter()
            .map(|&(a, b)| self.bags[a].intersection(&self.bags[b]).len())
            .max()
            .unwrap_or(0)
    }

    pub fn node_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Merge any bag that is a subset of an adjacent bag into that neighbor.
    /// Keeps the decomposition valid and removes redundant nodes.
    pub fn simplify(&self) -> TreeDecomposition {
        let mut td = self.clone();
        loop {
            let adj = td.node_neighbors();
            let mut victim = None;
            'outer: for t in 0..td.bags.len() {
                for &u in &adj[t] {
                    if td.bags[t].is_subset(&td.bags[u]) && td.bags.len() > 1 {
                        victim = Some((t, u));
                        break 'outer;
                    }
                }
            }
            let Some((t, u)) = victim else {
                return td;
            };
            let mut bags = Vec::new();
            let mut remap = vec![usize::MAX; td.bags.len()];
            for (i, b) in td.bags.iter().enumerate() {
                if i != t {
                    remap[i] = bags.len();
                    bags.push(b.clone());
                }
            }
            remap[t] = remap[u];
            let mut edges: Vec<(usize, usize)> = td
                .tree_edges
                .iter()
                .map(|&(a, b)| (remap[a].min(remap[b]), remap[a].max(remap[b])))
                .filter(|&(a, b)| a != b)
                .collect();
            edges.sort_unstable();
            edges.dedup();
            td = TreeDecomposition { host_n: td.host_n, bags, tree_edges: edges };
        }
    }
}

/// The separation displayed by a tree edge: S is the adhesion set, the sides
/// are the bag unions of the two subtrees minus S.
pub fn edge_separation(td: &TreeDecomposition, edge_index: usize) -> Separation {
    let (a, b) = td.tree_edges[edge_index];
    let s = td.bags[a].intersection(&td.bags[b]);
    let side = |root: usize, block: usize| -> VSet {
        let adj = td.node_neighbors();
        let mut seen = vec![false; td.bags.len()];
        seen[block] = true;
        seen[root] = true;
        let mut stack = vec![root];
        let mut out = VSet::empty(td.host_n);
        while let Some(t) = stack.pop() {
            out.union_with(&td.bags[t]);
            for &u in &adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.subtract(&s);
        out
    };
    let (y, z) = (side(a, b), side(b, a));
    Separation::new_unchecked(y, s, z)
}

#[derive(Clone, Debug)]
pub struct TdReport {
    pub width: usize,
    pub adhesion: usize,
    /// Per tree edge, whether the displayed separation is tight.
    pub edges_tight: Vec<bool>,
    /// Per tree edge, whether neither orientation of the displayed separation
    /// is degenerate.
    pub edges_nondegenerate: Vec<bool>,
}

/// Check the tree-decomposition axioms: the tree is a tree, every vertex and
/// every edge of the host lives in some bag, and the nodes holding any fixed
/// vertex form a subtree.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Result<TdReport> {
    if td.host_n != g.n() {
        return Err(Error::Invalid("decomposition is over a different host".into()));
    }
    let nn = td.bags.len();
    if nn == 0 {
        return Err(Error::Invalid("decomposition has no nodes".into()));
    }
    if td.tree_edges.len() != nn - 1 {
        return Err(Error::Invalid(format!(
            "{} nodes need {} tree edges, found {}",
            nn,
            nn - 1,
            td.tree_edges.len()
        )));
    }
    for &(a, b) in &td.tree_edges {
        if a >= nn || b >= nn || a == b {
            return Err(Error::Invalid("bad tree edge".into()));
        }
    }
    let adj = td.node_neighbors();
    // Connectivity (with the right edge count this also rules out cycles).
    let mut seen = vec![false; nn];
    let mut stack = vec![0];
    seen[0] = true;
    let mut cnt = 1;
    while let Some(t) = stack.pop() {
        for &u in &adj[t] {
            if !seen[u] {
                seen[u] = true;
                cnt += 1;
                stack.push(u);
            }
        }
    }
    if cnt != nn {
        return Err(Error::Invalid("decomposition tree is not connected".into()));
    }
    let mut cover = VSet::empty(g.n());
    for b in &td.bags {
        cover.union_with(b);
    }
    if cover != g.vertex_set() {
        return Err(Error::Invalid("bags do not cover the vertex set".into()));
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Err(Error::Invalid(format!("edge ({u},{v}) lives in no bag")));
        }
    }
    for v in 0..g.n() {
        let holders: Vec<usize> = (0..nn).filter(|&t| td.bags[t].contains(v)).collect();
        let mut seen = vec![false; nn];
        seen[holders[0]] = true;
        let mut stack = vec![holders[0]];
        let mut reached = 1;
        while let Some(t) = stack.pop() {
            for &u in &adj[t] {
                if !seen[u] && td.bags[u].contains(v) {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        if reached != holders.len() {
            return Err(Error::Invalid(format!("nodes holding vertex {v} are not a subtree")));
        }
    }
    let mut edges_tight = Vec::new();
    let mut edges_nondegenerate = Vec::new();
    for i in 0..td.tree_edges.len() {
        let sep = edge_separation(td, i);
        edges_tight.push(sep.is_proper() && is_tight(g, &sep));
        edges_nondegenerate.push(!is_degenerate(g, &sep) && !is_degenerate(g, &sep.reverse()));
    }
    Ok(TdReport { width: td.width(), adhesion: td.adhesion(), edges_tight, edges_nondegenerate })
}
