//! Automorphisms of small graphs, group actions given by permutation
//! generators, orbits, invariance checks and tree-decomposition canonicity.

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::Separation;
use crate::vset::VSet;
use std::collections::{HashMap, HashSet, VecDeque};

pub const GROUP_CLOSURE_CAP: usize = 1_000_000;
pub const AUTOMORPHISM_CAP: usize = 200_000;

#[derive(Clone, Debug)]
pub struct GroupAction {
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(g: &Graph, generators: Vec<Vec<usize>>) -> Result<GroupAction> {
        for p in &generators {
            if !is_automorphism(g, p) {
                return Err(Error::Invalid("generator is not an automorphism".into()));
            }
        }
        Ok(GroupAction { n: g.n(), generators })
    }

    pub fn trivial(n: usize) -> GroupAction {
        GroupAction { n, generators: Vec::new() }
    }

    /// Breadth-first closure; errors past the element cap.
    pub fn elements(&self) -> Result<Vec<Vec<usize>>> {
        let id: Vec<usize> = (0..self.n).collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        out.push(id.clone());
        queue.push_back(id);
        while let Some(p) = queue.pop_front() {
            for gen in &self.generators {
                let q: Vec<usize> = (0..self.n).map(|v| gen[p[v]]).collect();
                if seen.insert(q.clone()) {
                    if out.len() >= GROUP_CLOSURE_CAP {
                        return Err(Error::Budget("group closure exceeds element cap".into()));
                    }
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }
}

pub fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    if p.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in p {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if !g.has_edge(p[u], p[v]) {
                return false;
            }
        }
    }
    true
}

pub fn apply_to_set(p: &[usize], s: &VSet) -> VSet {
    VSet::from_iter(s.n, s.iter().map(|v| p[v]))
}

pub fn apply_to_separation(p: &[usize], s: &Separation) -> Separation {
    Separation::new_unchecked(
        apply_to_set(p, &s.y),
        apply_to_set(p, &s.s),
        apply_to_set(p, &s.z),
    )
}

// ---------------------------------------------------------------------------
// Color refinement and map search
// ---------------------------------------------------------------------------

fn refine_colors(g: &Graph, init: &[u64]) -> Vec<u64> {
    let mut colors: Vec<u64> = init.to_vec();
    loop {
        let mut sig: Vec<(u64, Vec<u64>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sig.clone();
        sorted.sort();
        sorted.dedup();
        let index: HashMap<_, u64> =
            sorted.into_iter().enumerate().map(|(i, s)| (s, i as u64)).collect();
        let new: Vec<u64> = sig.drain(..).map(|s| index[&s]).collect();
        if new == colors {
            return colors;
        }
        colors = new;
    }
}

/// All isomorphisms g -> h (or just one if `first_only`), found by
/// color-refinement-guided backtracking; capped.
fn search_maps(g: &Graph, h: &Graph, first_only: bool, cap: usize) -> Result<Vec<Vec<usize>>> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(Vec::new());
    }
    let n = g.n();
    let cg = refine_colors(g, &vec![0; n]);
    let ch = refine_colors(h, &vec![0; n]);
    let mut count_g: HashMap<u64, usize> = HashMap::new();
    let mut count_h: HashMap<u64, usize> = HashMap::new();
    for v in 0..n {
        *count_g.entry(cg[v]).or_default() += 1;
        *count_h.entry(ch[v]).or_default() += 1;
    }
    if count_g != count_h {
        return Ok(Vec::new());
    }
    // Map vertices in order of rarest color first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (count_g[&cg[v]], cg[v], v));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    fn rec(
        g: &Graph,
        h: &Graph,
        cg: &[u64],
        ch: &[u64],
        order: &[usize],
        idx: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
        cap: usize,
    ) -> Result<()> {
        if idx == order.len() {
            out.push(map.clone());
            if out.len() > cap {
                return Err(Error::Budget("map search exceeds cap".into()));
            }
            return Ok(());
        }
        let v = order[idx];
        for w in 0..h.n() {
            if used[w] || ch[w] != cg[v] {
                continue;
            }
            let ok = g.neighbors(v).iter().all(|&x| {
                map[x] == usize::MAX || h.has_edge(w, map[x])
            }) && (0..g.n()).all(|x| {
                map[x] == usize::MAX || g.has_edge(v, x) == h.has_edge(w, map[x])
            });
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = true;
            rec(g, h, cg, ch, order, idx + 1, map, used, out, first_only, cap)?;
            map[v] = usize::MAX;
            used[w] = false;
            if first_only && !out.is_empty() {
                return Ok(());
            }
        }
        Ok(())
    }
    rec(g, h, &cg, &ch, &order, 0, &mut map, &mut used, &mut out, first_only, cap)?;
    Ok(out)
}

/// Full automorphism group (all elements as generators).
pub fn automorphisms(g: &Graph) -> Result<GroupAction> {
    let maps = search_maps(g, g, false, AUTOMORPHISM_CAP)?;
    Ok(GroupAction { n: g.n(), generators: maps.into_iter().filter(|p| p.iter().enumerate().any(|(i, &v)| i != v)).collect() })
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    Ok(search_maps(g, h, true, AUTOMORPHISM_CAP)?.into_iter().next())
}

// ---------------------------------------------------------------------------
// Orbits and invariance
// ---------------------------------------------------------------------------

pub fn vertex_orbits(action: &GroupAction) -> Vec<Vec<usize>> {
    let mut seen = vec![false; action.n];
    let mut out = Vec::new();
    for v in 0..action.n {
        if seen[v] {
            continue;
        }
        let mut orbit = vec![v];
        seen[v] = true;
        let mut i = 0;
        while i < orbit.len() {
            let u = orbit[i];
            for p in &action.generators {
                if !seen[p[u]] {
                    seen[p[u]] = true;
                    orbit.push(p[u]);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out.sort();
    out
}

/// Partition a list of separations into orbits; members not closed under the
/// action contribute images outside the list, reported as None slots.
pub fn separation_orbits(action: &GroupAction, seps: &[Separation]) -> Vec<Vec<usize>> {
    let index: HashMap<(Vec<usize>, Vec<usize>), usize> =
        seps.iter().enumerate().map(|(i, s)| (s.canonical_key(), i)).collect();
    let mut seen = vec![false; seps.len()];
    let mut out = Vec::new();
    for i in 0..seps.len() {
        if seen[i] {
            continue;
        }
        let mut orbit = vec![i];
        seen[i] = true;
        let mut at = 0;
        while at < orbit.len() {
            let cur = orbit[at];
            for p in &action.generators {
                let img = apply_to_separation(p, &seps[cur]);
                if let Some(&j) = index.get(&img.canonical_key()) {
                    if !seen[j] {
                        seen[j] = true;
                        orbit.push(j);
                    }
                }
            }
            at += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Setwise closure of a separation family under the action, counting both
/// orientations as the same underlying separation.
pub fn invariant_family(action: &GroupAction, seps: &[Separation]) -> bool {
    let mut keys = HashSet::new();
    for s in seps {
        keys.insert(s.canonical_key());
        keys.insert(s.reverse().canonical_key());
    }
    for p in &action.generators {
        for s in seps {
            let img = apply_to_separation(p, s);
            if !keys.contains(&img.canonical_key()) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Canonicity of tree-decompositions
// ---------------------------------------------------------------------------

/// For each generator, search for a tree automorphism σ with
/// bag(σ(t)) = γ(bag(t)). Returns the witnesses, or the index of the first
/// failing generator.
pub fn is_canonical_td(
    td: &TreeDecomposition,
    action: &GroupAction,
) -> std::result::Result<Vec<Vec<usize>>, usize> {
    let mut witnesses = Vec::new();
    for (gi, p) in action.generators.iter().enumerate() {
        match tree_map_witness(td, p) {
            Some(w) => witnesses.push(w),
            None => return Err(gi),
        }
    }
    Ok(witnesses)
}

fn tree_map_witness(td: &TreeDecomposition, p: &[usize]) -> Option<Vec<usize>> {
    let nn = td.bags.len();
    let images: Vec<VSet> = td.bags.iter().map(|b| apply_to_set(p, b)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nn];
    for &(a, b) in &td.tree_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut sigma = vec![usize::MAX; nn];
    let mut used = vec![false; nn];
    fn rec(
        td: &TreeDecomposition,
        images: &[VSet],
        adj: &[Vec<usize>],
        t: usize,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if t == sigma.len() {
            return true;
        }
        if sigma[t] != usize::MAX {
            return rec(td, images, adj, t + 1, sigma, used);
        }
        for cand in 0..sigma.len() {
            if used[cand] || td.bags[cand] != images[t] {
                continue;
            }
            // Tree edges incident to already-mapped nodes must be preserved.
            let ok = adj[t].iter().all(|&u| {
                sigma[u] == usize::MAX || adj[cand].contains(&sigma[u])
            }) && adj[cand].len() == adj[t].len();
            if !ok {
                continue;
            }
            sigma[t] = cand;
            used[cand] = true;
            if rec(td, images, adj, t + 1, sigma, used) {
                return true;
            }
            sigma[t] = usize::MAX;
            used[cand] = false;
        }
        false
    }
    rec(td, &images, &adj, 0, &mut sigma, &mut used).then_some(sigma)
}

/// Orbits of tree edges of a TD under the action, using canonicity witnesses.
pub fn tree_edge_orbits(
    td: &TreeDecomposition,
    witnesses: &[Vec<usize>],
) -> Vec<Vec<(usize, usize)>> {
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let edges: Vec<(usize, usize)> = td.tree_edges.iter().map(|&(a, b)| norm(a, b)).collect();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut out = Vec::new();
    for &e in &edges {
        if seen.contains(&e) {
            continue;
        }
        let mut orbit = vec![e];
        seen.insert(e);
        let mut at = 0;
        while at < orbit.len() {
            let (a, b) = orbit[at];
            for w in witnesses {
                let img = norm(w[a], w[b]);
                if seen.insert(img) {
                    orbit.push(img);
                }
            }
            at += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}
