//! Building a tree-decomposition from a family of pairwise nested proper
//! separations. Nodes are the consistent orientations of the family, the bag
//! of an orientation is the intersection of the chosen S∪Z sides, and two
//! nodes are adjacent when they differ in exactly one separation.

use super::td::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{nested, Separation};
use crate::vset::VSet;
use std::collections::BTreeSet;

/// An orientation is inconsistent when one chosen small side swallows the
/// whole of another separation's large side: Y1∪S1 ⊇ S2∪Z2 for some ordered
/// pair. Consistent orientations then correspond to tree nodes.
fn conflict(a: &Separation, b: &Separation) -> bool {
    let ys_a = a.y.union(&a.s);
    let ys_b = b.y.union(&b.s);
    b.s.union(&b.z).is_subset(&ys_a) || a.s.union(&a.z).is_subset(&ys_b)
}

fn orientation_consistent(seps: &[Separation], orient: &[bool]) -> bool {
    let oriented: Vec<Separation> = seps
        .iter()
        .zip(orient)
        .map(|(s, &fwd)| if fwd { s.clone() } else { s.reverse() })
        .collect();
    for i in 0..oriented.len() {
        for j in i + 1..oriented.len() {
            if conflict(&oriented[i], &oriented[j]) {
                return false;
            }
        }
    }
    true
}

pub fn td_from_nested_family(g: &Graph, family: &[Separation]) -> Result<TreeDecomposition> {
    // Dedup under orientation reversal.
    let mut seen = BTreeSet::new();
    let mut seps: Vec<Separation> = Vec::new();
    for s in family {
        if !s.is_proper() {
            return Err(Error::Invalid("nested family contains a non-proper separation".into()));
        }
        let key = s.canonical_key().min(s.reverse().canonical_key());
        if seen.insert(key) {
            seps.push(s.clone());
        }
    }
    for i in 0..seps.len() {
        for j in i + 1..seps.len() {
            if !nested(&seps[i], &seps[j]) {
                return Err(Error::Invalid(format!(
                    "separations {i} and {j} of the family are not nested"
                )));
            }
        }
    }
    if seps.is_empty() {
        return Ok(TreeDecomposition::trivial(g));
    }

    // Start from an orientation anchored at a vertex avoiding as many
    // separators as possible; separations whose separator holds the anchor
    // are resolved by a small backtracking pass.
    let anchor = (0..g.n())
        .min_by_key(|&v| seps.iter().filter(|s| s.s.contains(v)).count())
        .unwrap();
    let mut orient = vec![true; seps.len()];
    let mut ambiguous = Vec::new();
    for (i, s) in seps.iter().enumerate() {
        if s.y.contains(anchor) {
            orient[i] = false;
        } else if s.s.contains(anchor) {
            ambiguous.push(i);
        }
    }
    if !resolve(&seps, &mut orient, &ambiguous, 0) {
        return Err(Error::Invalid("nested family admits no consistent orientation".into()));
    }

    // All consistent orientations are reachable by single flips.
    let mut nodes: Vec<Vec<bool>> = vec![orient.clone()];
    let mut index = BTreeSet::new();
    index.insert(orient.clone());
    let mut at = 0;
    while at < nodes.len() {
        for i in 0..seps.len() {
            let mut next = nodes[at].clone();
            next[i] = !next[i];
            if !index.contains(&next) && orientation_consistent(&seps, &next) {
                index.insert(next.clone());
                nodes.push(next);
            }
        }
        at += 1;
    }
    if nodes.len() != seps.len() + 1 {
        return Err(Error::Invalid(format!(
            "family of {} separations yields {} consistent orientations",
            seps.len(),
            nodes.len()
        )));
    }

    let bag = |orient: &[bool]| -> VSet {
        let mut b = g.vertex_set();
        for (s, &fwd) in seps.iter().zip(orient) {
            let side = if fwd { s.s.union(&s.z) } else { s.s.union(&s.y) };
            b.intersect_with(&side);
        }
        b
    };
    let bags: Vec<VSet> = nodes.iter().map(|o| bag(o)).collect();
    let mut tree_edges = Vec::new();
    for a in 0..nodes.len() {
        for b in a + 1..nodes.len() {
            let diff = nodes[a].iter().zip(&nodes[b]).filter(|(x, y)| x != y).count();
            if diff == 1 {
                tree_edges.push((a, b));
            }
        }
    }
    let td = TreeDecomposition { host_n: g.n(), bags, tree_edges };
    super::td::validate_td(g, &td)?;
    Ok(td)
}

fn resolve(seps: &[Separation], orient: &mut [bool], ambiguous: &[usize], at: usize) -> bool {
    if at == ambiguous.len() {
        return orientation_consistent(seps, orient);
    }
    for fwd in [true, false] {
        orient[ambiguous[at]] = fwd;
        if resolve(seps, orient, ambiguous, at + 1) {
            return true;
        }
    }
    false
}
