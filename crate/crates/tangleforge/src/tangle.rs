//! Tangles of order up to 4: enumeration, minimal separations, cores,
//! regions, fences, crossedge matchings, lifting and distinguishing.

use crate::error::{Error, Result};
use crate::graph::{Graph, MinorModel};
use crate::separation::{
    classify_pair, compare, enumerate_proper_separations, is_degenerate, Cmp, PairClass,
    Separation,
};
use crate::vset::VSet;
use std::collections::HashMap;
use std::sync::Arc;

pub const SEARCH_NODE_BUDGET: u64 = 10_000_000;

/// The separation universe of a host graph for orders < k. Proper separations
/// are materialized and indexed; the non-proper block ((∅,S,Z) / (Z,S,∅) for
/// every S with |S| < k) is represented implicitly: every tangle contains
/// exactly the (∅,S,Z) orientation of each, so only the proper block varies.
pub struct SepUniverse {
    pub n: usize,
    pub k: usize,
    pub proper: Vec<Separation>,
    index: HashMap<(Vec<usize>, Vec<usize>), usize>,
    pub reverse_of: Vec<usize>,
    /// Unordered pairs (i, reverse_of(i)) with i < reverse_of(i).
    pub pairs: Vec<(usize, usize)>,
}

impl SepUniverse {
    pub fn build(g: &Graph, k: usize) -> SepUniverse {
        let proper = enumerate_proper_separations(g, k - 1);
        let mut index = HashMap::new();
        for (i, s) in proper.iter().enumerate() {
            index.insert(s.canonical_key(), i);
        }
        let reverse_of: Vec<usize> =
            proper.iter().map(|s| index[&s.reverse().canonical_key()]).collect();
        let pairs = (0..proper.len()).filter(|&i| i < reverse_of[i]).map(|i| (i, reverse_of[i])).collect();
        SepUniverse { n: g.n(), k, proper, index, reverse_of, pairs }
    }

    pub fn find(&self, sep: &Separation) -> Option<usize> {
        self.index.get(&sep.canonical_key()).copied()
    }
}

#[derive(Clone)]
pub struct Tangle {
    pub k: usize,
    pub universe: Arc<SepUniverse>,
    /// Bit i set iff universe.proper[i] is a member.
    pub members: VSet,
}

impl PartialEq for Tangle {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.members == other.members
    }
}
impl Eq for Tangle {}

impl std::fmt::Debug for Tangle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tangle(k={}, members={:?})", self.k, self.members.to_vec())
    }
}

impl Tangle {
    /// Membership of an arbitrary separation of order < k.
    pub fn contains(&self, sep: &Separation) -> bool {
        if sep.order() >= self.k {
            return false;
        }
        if sep.z.is_empty() {
            return false;
        }
        if sep.y.is_empty() {
            return true;
        }
        match self.universe.find(sep) {
            Some(i) => self.members.contains(i),
            None => false,
        }
    }

    pub fn proper_members(&self) -> Vec<&Separation> {
        self.members.iter().map(|i| &self.universe.proper[i]).collect()
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

fn small_side_forced(sep: &Separation, k: usize) -> bool {
    2 * (sep.y.len() + sep.order()) <= 3 * (k - 1)
}

/// Edges of g meeting a vertex set, as an edge-index bitset.
fn edge_meet(edges: &[(usize, usize)], set: &VSet) -> VSet {
    let mut out = VSet::empty(edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        if set.contains(u) || set.contains(v) {
            out.insert(i);
        }
    }
    out
}

struct TangleSearch<'a> {
    uni: &'a SepUniverse,
    z_bits: Vec<VSet>,
    e_bits: Vec<VSet>,
    budget: u64,
    nodes: u64,
    found: Vec<VSet>,
}

impl<'a> TangleSearch<'a> {
    /// Pairwise tangle-axiom filter: members a and b (possibly equal) must
    /// leave a common vertex in Z_a∩Z_b or an edge meeting both.
    fn pair_ok(&self, a: usize, b: usize) -> bool {
        self.z_bits[a].intersects(&self.z_bits[b]) || self.e_bits[a].intersects(&self.e_bits[b])
    }

    fn search(&mut self, state: &mut [Option<bool>], chosen: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "tangle enumeration exceeded {} search nodes",
                self.budget
            )));
        }
        let next = state.iter().position(|o| o.is_none());
        let Some(pi) = next else {
            let mut members = VSet::empty(self.uni.proper.len());
            for (pi, &(i, j)) in self.uni.pairs.iter().enumerate() {
                if state[pi] == Some(false) {
                    members.insert(i);
                } else {
                    members.insert(j);
                }
            }
            self.found.push(members);
            return Ok(());
        };
        for orient in [false, true] {
            let m = if orient { self.uni.pairs[pi].1 } else { self.uni.pairs[pi].0 };
            if self.pair_ok(m, m) && chosen.iter().all(|&c| self.pair_ok(c, m)) {
                state[pi] = Some(orient);
                chosen.push(m);
                self.search(state, chosen)?;
                chosen.pop();
                state[pi] = None;
            }
        }
        Ok(())
    }
}

/// All tangles of order k (2 <= k <= 4), deduplicated, canonically ordered.
pub fn enumerate_tangles(g: &Graph, k: usize) -> Result<Vec<Tangle>> {
    enumerate_tangles_budgeted(g, k, SEARCH_NODE_BUDGET)
}

pub fn enumerate_tangles_budgeted(g: &Graph, k: usize, budget: u64) -> Result<Vec<Tangle>> {
    if !(2..=4).contains(&k) {
        return Err(Error::Invalid("tangle order must be between 2 and 4".into()));
    }
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Invalid("tangle enumeration needs a connected nonempty graph".into()));
    }
    let uni = Arc::new(SepUniverse::build(g, k));
    // A tangle orients every (∅,S,Z) inward; that block satisfies the axioms
    // against anything with nonempty Z, except when S = V(G) (then Z = ∅ on
    // both sides and no tangle of this order exists).
    if g.n() < k {
        // Some subset S = V has |S| < k: the pair (∅,V,∅) cannot be oriented.
        return Ok(Vec::new());
    }
    let edges = g.edges();
    let z_bits: Vec<VSet> = uni.proper.iter().map(|s| s.z.clone()).collect();
    let e_bits: Vec<VSet> = uni.proper.iter().map(|s| edge_meet(&edges, &s.z)).collect();

    let mut state: Vec<Option<bool>> = vec![None; uni.pairs.len()];
    // Forced orientations by the small-side rule.
    for (pi, &(i, j)) in uni.pairs.iter().enumerate() {
        let fi = small_side_forced(&uni.proper[i], k);
        let fj = small_side_forced(&uni.proper[j], k);
        if fi && fj {
            return Ok(Vec::new());
        }
        if fi {
            state[pi] = Some(false);
        } else if fj {
            state[pi] = Some(true);
        }
    }
    let mut chosen: Vec<usize> = Vec::new();
    for (pi, o) in state.iter().enumerate() {
        if let Some(orient) = o {
            chosen.push(if *orient { uni.pairs[pi].1 } else { uni.pairs[pi].0 });
        }
    }
    let mut searcher = TangleSearch {
        uni: &uni,
        z_bits,
        e_bits,
        budget,
        nodes: 0,
        found: Vec::new(),
    };
    // The forced set must itself be pairwise consistent.
    let consistent = chosen
        .iter()
        .enumerate()
        .all(|(a, &x)| searcher.pair_ok(x, x) && chosen[a + 1..].iter().all(|&y| searcher.pair_ok(x, y)));
    if consistent {
        searcher.search(&mut state, &mut chosen)?;
    }
    let mut out = Vec::new();
    for members in searcher.found {
        let t = Tangle { k, universe: uni.clone(), members };
        if validate_tangle(g, &t).is_ok() {
            out.push(t);
        }
    }
    out.sort_by(|a, b| a.members.cmp(&b.members));
    out.dedup();
    Ok(out)
}

/// Full axiom re-validation, independent of the enumeration pruning: exact
/// orientation of every pair, and the three-member condition over all triples
/// of minimal members (all triples of all members for n <= 12, including the
/// implicit non-proper block).
pub fn validate_tangle(g: &Graph, t: &Tangle) -> Result<()> {
    let uni = &t.universe;
    for &(i, j) in &uni.pairs {
        if t.members.contains(i) == t.members.contains(j) {
            return Err(Error::Violation("orientation axiom: pair not oriented exactly once".into()));
        }
    }
    let edges = g.edges();
    let triple_ok = |zs: [&VSet; 3]| {
        let mut inter = zs[0].clone();
        inter.intersect_with(zs[1]);
        inter.intersect_with(zs[2]);
        if !inter.is_empty() {
            return true;
        }
        edges.iter().any(|&(u, v)| {
            zs.iter().all(|z| z.contains(u) || z.contains(v))
        })
    };
    let minimal = minimal_separations(t);
    let min_zs: Vec<&VSet> = minimal.iter().map(|s| &s.z).collect();
    for a in 0..min_zs.len() {
        for b in a..min_zs.len() {
            for c in b..min_zs.len() {
                if !triple_ok([min_zs[a], min_zs[b], min_zs[c]]) {
                    return Err(Error::Violation("three-member condition fails on minimal members".into()));
                }
            }
        }
    }
    if g.n() <= 12 {
        let mut all_zs: Vec<VSet> = t.members.iter().map(|i| uni.proper[i].z.clone()).collect();
        // Non-proper members (∅,S,Z).
        let verts: Vec<usize> = (0..g.n()).collect();
        let mut s_buf = Vec::new();
        collect_subsets(&verts, t.k - 1, &mut s_buf, 0, &mut |s| {
            let mut z = VSet::full(g.n());
            for &v in s {
                z.remove(v);
            }
            if !z.is_empty() {
                all_zs.push(z);
            }
        });
        for a in 0..all_zs.len() {
            for b in a..all_zs.len() {
                for c in b..all_zs.len() {
                    if !triple_ok([&all_zs[a], &all_zs[b], &all_zs[c]]) {
                        return Err(Error::Violation("three-member condition fails".into()));
                    }
                }
            }
        }
    }
    Ok(())
}

fn collect_subsets(
    verts: &[usize],
    max: usize,
    cur: &mut Vec<usize>,
    from: usize,
    f: &mut impl FnMut(&[usize]),
) {
    f(cur);
    if cur.len() == max {
        return;
    }
    for i in from..verts.len() {
        cur.push(verts[i]);
        collect_subsets(verts, max, cur, i + 1, f);
        cur.pop();
    }
}

// ---------------------------------------------------------------------------
// Derived sets
// ---------------------------------------------------------------------------

/// The minimal members under the separation order. If the tangle has no
/// proper member, this is the single separation (∅,∅,V).
pub fn minimal_separations(t: &Tangle) -> Vec<Separation> {
    let props: Vec<&Separation> = t.proper_members();
    if props.is_empty() {
        let n = t.universe.n;
        return vec![Separation::new_unchecked(
            VSet::empty(n),
            VSet::empty(n),
            VSet::full(n),
        )];
    }
    let mut out = Vec::new();
    'outer: for (i, a) in props.iter().enumerate() {
        for (j, b) in props.iter().enumerate() {
            if i != j && compare(b, a) == Cmp::Less {
                continue 'outer;
            }
        }
        out.push((*a).clone());
    }
    out.sort_by_key(|s| s.canonical_key());
    out
}

pub fn nondegenerate_minimal(g: &Graph, t: &Tangle) -> Result<Vec<Separation>> {
    if t.k != 4 {
        return Err(Error::Invalid("non-degenerate minimal set needs an order-4 tangle".into()));
    }
    Ok(minimal_separations(t)
        .into_iter()
        .filter(|s| !is_degenerate(g, s))
        .collect())
}

fn require_3con(g: &Graph) -> Result<()> {
    if !crate::graph::is_k_connected(g, 3) {
        return Err(Error::Invalid("operation requires a 3-connected host".into()));
    }
    Ok(())
}

/// Intersection of Z∪S over the non-degenerate minimal members.
pub fn core_x(g: &Graph, t: &Tangle) -> Result<VSet> {
    require_3con(g)?;
    let nd = nondegenerate_minimal(g, t)?;
    let mut x = VSet::full(g.n());
    for s in &nd {
        x.intersect_with(&s.s.union(&s.z));
    }
    Ok(x)
}

/// Union of separators over the non-degenerate minimal members, plus the
/// intersection of their Z sides.
pub fn region_r(g: &Graph, t: &Tangle) -> Result<VSet> {
    require_3con(g)?;
    let nd = nondegenerate_minimal(g, t)?;
    let mut seps = VSet::empty(g.n());
    let mut inner = VSet::full(g.n());
    for s in &nd {
        seps.union_with(&s.s);
        inner.intersect_with(&s.z);
    }
    Ok(seps.union(&inner))
}

/// Crossedges among pairs of non-degenerate minimal members; guaranteed to
/// form a matching (an overlap is an upstream bug, reported as a violation).
pub fn crossedges(g: &Graph, t: &Tangle) -> Result<Vec<(usize, usize)>> {
    require_3con(g)?;
    let nd = nondegenerate_minimal(g, t)?;
    let mut edges = Vec::new();
    for (i, a) in nd.iter().enumerate() {
        for b in &nd[i + 1..] {
            if let PairClass::Crossing(s1, s2) = classify_pair(g, a, b) {
                let e = (s1.min(s2), s1.max(s2));
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
    }
    edges.sort_unstable();
    let mut seen = VSet::empty(g.n());
    for &(u, v) in &edges {
        if seen.contains(u) || seen.contains(v) {
            return Err(Error::Violation("crossedge set is not a matching".into()));
        }
        seen.insert(u);
        seen.insert(v);
    }
    Ok(edges)
}

/// Separator vertices not on a crossedge, plus the crossedge partners of the
/// separator's crossedge endpoints. Always has exactly |S| = 3 vertices.
pub fn fence(g: &Graph, t: &Tangle, sep: &Separation) -> Result<VSet> {
    let nd = nondegenerate_minimal(g, t)?;
    if !nd.contains(sep) {
        return Err(Error::Invalid("fence argument is not a non-degenerate minimal member".into()));
    }
    let cross = crossedges(g, t)?;
    let mut out = VSet::empty(g.n());
    for v in sep.s.iter() {
        match cross.iter().find(|&&(a, b)| a == v || b == v) {
            Some(&(a, b)) => out.insert(if a == v { b } else { a }),
            None => out.insert(v),
        }
    }
    if out.len() != sep.s.len() {
        return Err(Error::Violation("fence size differs from separator size".into()));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Lifting and distinguishing
// ---------------------------------------------------------------------------

/// Projection of a host separation through a minor model: a pattern vertex
/// goes to S' if its branch set meets S, otherwise to the side wholly
/// containing the branch set.
pub fn project_through_model(
    model: &MinorModel,
    pattern_n: usize,
    sep: &Separation,
) -> Separation {
    let mut y = VSet::empty(pattern_n);
    let mut s = VSet::empty(pattern_n);
    let mut z = VSet::empty(pattern_n);
    for (v, b) in model.branch_sets.iter().enumerate() {
        if b.intersects(&sep.s) {
            s.insert(v);
        } else if b.is_subset(&sep.y) {
            y.insert(v);
        } else {
            z.insert(v);
        }
    }
    Separation::new_unchecked(y, s, z)
}

/// Lift a pattern tangle along a minor model to a host tangle of the same
/// order; the result is fully re-validated.
pub fn lift_tangle(
    host: &Graph,
    pattern: &Graph,
    model: &MinorModel,
    t_pattern: &Tangle,
) -> Result<Tangle> {
    model.validate(host, pattern)?;
    let uni = Arc::new(SepUniverse::build(host, t_pattern.k));
    let mut members = VSet::empty(uni.proper.len());
    for (i, sep) in uni.proper.iter().enumerate() {
        let proj = project_through_model(model, pattern.n(), sep);
        if t_pattern.contains(&proj) {
            members.insert(i);
        }
    }
    let t = Tangle { k: t_pattern.k, universe: uni, members };
    validate_tangle(host, &t)?;
    Ok(t)
}

pub fn distinguishes(sep: &Separation, t1: &Tangle, t2: &Tangle) -> bool {
    let rev = sep.reverse();
    (t1.contains(sep) && t2.contains(&rev)) || (t2.contains(sep) && t1.contains(&rev))
}

pub fn efficiently_distinguishes(sep: &Separation, t1: &Tangle, t2: &Tangle) -> bool {
    if !distinguishes(sep, t1, t2) {
        return false;
    }
    t1.universe
        .proper
        .iter()
        .filter(|s| s.order() < sep.order())
        .all(|s| !distinguishes(s, t1, t2))
}

/// All efficient distinguishers of a tangle pair (one orientation each,
/// the orientation lying in t1).
pub fn efficient_distinguishers(t1: &Tangle, t2: &Tangle) -> Vec<Separation> {
    let mut best: Option<usize> = None;
    let mut out: Vec<Separation> = Vec::new();
    for sep in &t1.universe.proper {
        if t1.contains(sep) && t2.contains(&sep.reverse()) {
            match best {
                Some(b) if sep.order() > b => continue,
                Some(b) if sep.order() == b => out.push(sep.clone()),
                _ => {
                    best = Some(sep.order());
                    out = vec![sep.clone()];
                }
            }
        }
    }
    out.sort_by_key(|s| s.canonical_key());
    out
}
