//! Closed-walk generators from a tree-decomposition: fundamental cycles of
//! each torso with virtual edges realized by canonical component paths, plus
//! correction walks for every alternative realization.

use super::td::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{torso, Graph};
use crate::vset::VSet;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    /// Closed: first and last vertex coincide.
    pub vertices: Vec<usize>,
}

/// Deterministic shortest path from a to b inside `allowed` (which must
/// contain both): breadth-first with sorted neighbor order.
fn shortest_path(g: &Graph, allowed: &VSet, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(a);
    while let Some(v) = queue.pop_front() {
        if v == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(v) {
            if allowed.contains(w) && !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Components of G minus the bag that realize the pair {a,b}, i.e. have both
/// in their neighborhood; sorted by least vertex.
fn realizing_components(g: &Graph, bag: &VSet, a: usize, b: usize) -> Vec<VSet> {
    let mut comps: Vec<VSet> = g
        .components_within(&bag.complement())
        .into_iter()
        .filter(|c| {
            let nb = g.neighborhood(c);
            nb.contains(a) && nb.contains(b)
        })
        .collect();
    comps.sort_by_key(|c| c.first());
    comps
}

fn path_through(g: &Graph, comp: &VSet, a: usize, b: usize) -> Result<Vec<usize>> {
    let mut allowed = comp.clone();
    allowed.insert(a);
    allowed.insert(b);
    // Force the path to actually enter the component: step from a to its
    // least neighbor inside, then run a shortest path within comp to b.
    let first = g
        .neighbors(a)
        .iter()
        .copied()
        .find(|&w| comp.contains(w))
        .ok_or_else(|| Error::Invalid("component does not touch the endpoint".into()))?;
    let mut inner = comp.clone();
    inner.insert(b);
    let rest = shortest_path(g, &inner, first, b)
        .ok_or_else(|| Error::Invalid("no path through realizing component".into()))?;
    let mut path = vec![a];
    path.extend(rest);
    Ok(path)
}

/// The canonical realization of a torso edge: the edge itself when real,
/// otherwise the path through the least realizing component.
fn realize(g: &Graph, bag: &VSet, a: usize, b: usize) -> Result<Vec<usize>> {
    if g.has_edge(a, b) {
        return Ok(vec![a, b]);
    }
    let comps = realizing_components(g, bag, a, b);
    let comp = comps
        .first()
        .ok_or_else(|| Error::Invalid(format!("torso edge ({a},{b}) has no realization")))?;
    path_through(g, comp, a, b)
}

fn splice(walk: &mut Vec<usize>, seg: &[usize]) {
    debug_assert_eq!(walk.last(), seg.first());
    walk.extend_from_slice(&seg[1..]);
}

fn normalize(w: &[usize]) -> Vec<usize> {
    // Closed walk, first == last: canonical form under rotation and
    // reflection, for deduplication only.
    let cyc = &w[..w.len() - 1];
    let m = cyc.len();
    let mut best: Option<Vec<usize>> = None;
    for rot in 0..m {
        for reflect in [false, true] {
            let cand: Vec<usize> = (0..m)
                .map(|i| {
                    let idx = if reflect { (m + rot + m - i) % m } else { (rot + i) % m };
                    cyc[idx]
                })
                .collect();
            if best.as_ref().map_or(true, |b| &cand < b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Closed-walk generators of the host relative to a tree-decomposition. For
/// each torso: the fundamental cycles of a breadth-first spanning tree, with
/// every torso edge replaced by its canonical realization; plus a correction
/// walk for every further realization of a torso edge.
pub fn closed_walk_generators(g: &Graph, td: &TreeDecomposition) -> Result<Vec<Walk>> {
    super::td::validate_td(g, td)?;
    let mut out = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut push = |w: Vec<usize>, out: &mut Vec<Walk>| {
        if w.len() > 3 && seen.insert(normalize(&w)) {
            out.push(Walk { vertices: w });
        }
    };
    for bag in &td.bags {
        let (tg, map) = torso(g, bag)?;
        // Breadth-first spanning tree of the torso (per component).
        let mut parent = vec![usize::MAX; tg.n()];
        let mut depth = vec![0usize; tg.n()];
        let mut visited = vec![false; tg.n()];
        let mut tree_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for root in 0..tg.n() {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &w in tg.neighbors(v) {
                    if !visited[w] {
                        visited[w] = true;
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        tree_edges.insert((v.min(w), v.max(w)));
                        queue.push_back(w);
                    }
                }
            }
        }
        // Fundamental cycles from the non-tree edges.
        for (u, v) in tg.edges() {
            if tree_edges.contains(&(u.min(v), u.max(v))) {
                continue;
            }
            let mut a = u;
            let mut b = v;
            let mut left = vec![a];
            let mut right = vec![b];
            while depth[a] > depth[b] {
                a = parent[a];
                left.push(a);
            }
            while depth[b] > depth[a] {
                b = parent[b];
                right.push(b);
            }
            while a != b {
                a = parent[a];
                b = parent[b];
                left.push(a);
                right.push(b);
            }
            right.pop();
            right.reverse();
            left.extend(right);
            left.push(u);
            // left is now the cycle in torso-local vertices; realize each step.
            let mut walk = vec![map[left[0]]];
            for step in left.windows(2) {
                let seg = realize(g, bag, map[step[0]], map[step[1]])?;
                splice(&mut walk, &seg);
            }
            push(walk, &mut out);
        }
        // Correction walks: one per extra realization of any torso edge.
        for (u, v) in tg.edges() {
            let (a, b) = (map[u], map[v]);
            let base = realize(g, bag, a, b)?;
            let mut alts: Vec<Vec<usize>> = realizing_components(g, bag, a, b)
                .iter()
                .map(|c| path_through(g, c, a, b))
                .collect::<Result<_>>()?;
            if g.has_edge(a, b) {
                // The edge itself is the canonical realization; every
                // component path is an alternative.
            } else {
                alts.remove(0);
            }
            for alt in alts {
                let mut walk = base.clone();
                let mut back = alt;
                back.reverse();
                splice(&mut walk, &back);
                push(walk, &mut out);
            }
        }
    }
    Ok(out)
}
