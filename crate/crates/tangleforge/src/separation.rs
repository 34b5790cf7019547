//! Separations (Y,S,Z): tightness, degeneracy, the order relation, pairwise
//! classification and enumeration.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VSet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Separation {
    pub y: VSet,
    pub s: VSet,
    pub z: VSet,
}

impl Separation {
    pub fn new(g: &Graph, y: VSet, s: VSet, z: VSet) -> Result<Separation> {
        let n = g.n();
        if y.n != n || s.n != n || z.n != n {
            return Err(Error::Invalid("separation sets over wrong host".into()));
        }
        if y.intersects(&s) || y.intersects(&z) || s.intersects(&z) {
            return Err(Error::Invalid("separation sets not disjoint".into()));
        }
        if y.union(&s).union(&z) != VSet::full(n) {
            return Err(Error::Invalid("separation sets do not cover V".into()));
        }
        for v in y.iter() {
            if g.neighbors(v).iter().any(|&w| z.contains(w)) {
                return Err(Error::Invalid(format!("edge between Y and Z at vertex {v}")));
            }
        }
        Ok(Separation { y, s, z })
    }

    /// No validation; for internal construction from component data.
    pub fn new_unchecked(y: VSet, s: VSet, z: VSet) -> Separation {
        Separation { y, s, z }
    }

    pub fn order(&self) -> usize {
        self.s.len()
    }

    pub fn is_proper(&self) -> bool {
        !self.y.is_empty() && !self.z.is_empty()
    }

    pub fn reverse(&self) -> Separation {
        Separation { y: self.z.clone(), s: self.s.clone(), z: self.y.clone() }
    }

    /// Sort key (sorted S, then sorted Y).
    pub fn canonical_key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.s.to_vec(), self.y.to_vec())
    }
}

/// Both sides contain a component whose full neighborhood is exactly S.
pub fn is_tight(g: &Graph, sep: &Separation) -> bool {
    let full = |side: &VSet| {
        g.components_within(side).iter().any(|c| g.neighborhood(c) == sep.s)
    };
    full(&sep.y) && full(&sep.z)
}

/// Order 3, independent separator, |Y| = 1.
pub fn is_degenerate(g: &Graph, sep: &Separation) -> bool {
    if sep.order() != 3 || sep.y.len() != 1 {
        return false;
    }
    let sv: Vec<usize> = sep.s.to_vec();
    for (i, &u) in sv.iter().enumerate() {
        for &v in &sv[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cmp {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// (Y,S,Z) precedes (Y',S',Z') iff S∪Z ⊊ S'∪Z', or S∪Z = S'∪Z' and S ⊆ S'.
pub fn compare(a: &Separation, b: &Separation) -> Cmp {
    let sza = a.s.union(&a.z);
    let szb = b.s.union(&b.z);
    let le = if sza == szb {
        a.s.is_subset(&b.s)
    } else {
        sza.is_subset(&szb)
    };
    let ge = if sza == szb {
        b.s.is_subset(&a.s)
    } else {
        szb.is_subset(&sza)
    };
    match (le, ge) {
        (true, true) => Cmp::Equal,
        (true, false) => Cmp::Less,
        (false, true) => Cmp::Greater,
        (false, false) => Cmp::Incomparable,
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairClass {
    Orthogonal,
    /// Crossedge (s1, s2) with s1 ∈ S1∩Y2 and s2 ∈ S2∩Y1.
    Crossing(usize, usize),
    Neither,
}

pub fn classify_pair(g: &Graph, a: &Separation, b: &Separation) -> PairClass {
    let left = a.y.union(&a.s);
    let right = b.y.union(&b.s);
    if left.intersection(&right).is_subset(&a.s.intersection(&b.s)) {
        return PairClass::Orthogonal;
    }
    if a.y.is_disjoint(&b.y) && a.s.is_disjoint(&b.s) {
        let s1s = a.s.intersection(&b.y);
        let s2s = b.s.intersection(&a.y);
        if s1s.len() == 1 && s2s.len() == 1 {
            let s1 = s1s.first().unwrap();
            let s2 = s2s.first().unwrap();
            if g.has_edge(s1, s2) && a.y.intersection(&b.s) == s2s && b.y.intersection(&a.s) == s1s {
                return PairClass::Crossing(s1, s2);
            }
        }
    }
    PairClass::Neither
}

/// Nested in the classical sense: some orientation satisfies
/// Y1∪S1 ⊆ Y2∪S2 and S2∪Z2 ⊆ S1∪Z1.
pub fn nested(a: &Separation, b: &Separation) -> bool {
    let corners = [
        (a.clone(), b.clone()),
        (a.clone(), b.reverse()),
        (a.reverse(), b.clone()),
        (a.reverse(), b.reverse()),
    ];
    corners.iter().any(|(x, y)| {
        x.y.union(&x.s).is_subset(&y.y.union(&y.s)) && y.s.union(&y.z).is_subset(&x.s.union(&x.z))
    })
}

/// All proper separations of order <= max_order of a connected graph, both
/// orientations, canonically sorted. Each proper separation has Y and Z
/// unions of components of G−S.
pub fn enumerate_proper_separations(g: &Graph, max_order: usize) -> Vec<Separation> {
    let n = g.n();
    let adj = g.adj_bits();
    let mut out = Vec::new();
    let mut s_buf: Vec<usize> = Vec::new();
    enumerate_subsets(n, max_order, &mut s_buf, 0, &mut |sv| {
        let mut rest = g.vertex_set();
        let mut s = VSet::empty(n);
        for &v in sv {
            rest.remove(v);
            s.insert(v);
        }
        let comps = bit_components(&adj, &rest);
        if comps.len() < 2 {
            return;
        }
        if comps.len() > 20 {
            // 2^20 sides of one separator would dwarf desk scale; treat as a
            // hard invariant of the instances we accept.
            panic!("separator with {} components exceeds enumeration bounds", comps.len());
        }
        for mask in 1..(1u64 << comps.len()) - 1 {
            let mut y = VSet::empty(n);
            for (i, c) in comps.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    y.union_with(c);
                }
            }
            let z = rest.difference(&y);
            out.push(Separation { y, s: s.clone(), z });
        }
    });
    out.sort_by_key(|s| s.canonical_key());
    out.dedup();
    out
}

/// Components of the subgraph on `within`, via frontier-expansion on bitset
/// adjacency rows.
pub fn bit_components(adj: &[VSet], within: &VSet) -> Vec<VSet> {
    let mut remaining = within.clone();
    let mut out = Vec::new();
    while let Some(v0) = remaining.first() {
        let mut comp = VSet::empty(within.n);
        comp.insert(v0);
        let mut frontier = vec![v0];
        while let Some(v) = frontier.pop() {
            let mut new = adj[v].intersection(&remaining);
            new.subtract(&comp);
            for w in new.iter() {
                comp.insert(w);
                frontier.push(w);
            }
        }
        remaining.subtract(&comp);
        out.push(comp);
    }
    out
}

fn enumerate_subsets(
    n: usize,
    max: usize,
    cur: &mut Vec<usize>,
    from: usize,
    f: &mut impl FnMut(&[usize]),
) {
    f(cur);
    if cur.len() == max {
        return;
    }
    for v in from..n {
        cur.push(v);
        enumerate_subsets(n, max, cur, v + 1, f);
        cur.pop();
    }
}

/// Every tight separation of order <= max_order (proper by definition of
/// tightness), both orientations, canonically sorted.
pub fn enumerate_tight_separations(g: &Graph, max_order: usize) -> Result<Vec<Separation>> {
    if !g.is_connected() {
        return Err(Error::Invalid("tight-separation enumeration needs a connected graph".into()));
    }
    if max_order > 3 {
        return Err(Error::Invalid("tight-separation enumeration supports order <= 3".into()));
    }
    Ok(enumerate_proper_separations(g, max_order)
        .into_iter()
        .filter(|s| is_tight(g, s))
        .collect())
}
