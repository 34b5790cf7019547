//! Matching contraction: the contracted graph, vertex projection/expansion,
//! separation projection and induced tangles.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::Separation;
use crate::tangle::{enumerate_tangles, Tangle};
use crate::vset::VSet;

#[derive(Clone, Debug)]
pub struct ContractionMap {
    pub matching: Vec<(usize, usize)>,
    pub target: Graph,
    /// Source vertex -> target vertex.
    pub forward: Vec<usize>,
    /// Target vertex -> its source preimage (one or two vertices).
    pub backward: Vec<Vec<usize>>,
}

/// Contract each edge of a matching; the merged vertex inherits the union of
/// the endpoint neighborhoods. Target vertices are the sorted representatives
/// (min endpoint for merged pairs).
pub fn contract_matching(g: &Graph, matching: &[(usize, usize)]) -> Result<ContractionMap> {
    let n = g.n();
    let mut partner = vec![usize::MAX; n];
    for &(u, v) in matching {
        if u >= n || v >= n || u == v || !g.has_edge(u, v) {
            return Err(Error::Invalid(format!("({u},{v}) is not an edge")));
        }
        if partner[u] != usize::MAX || partner[v] != usize::MAX {
            return Err(Error::Invalid("edge set is not a matching".into()));
        }
        partner[u] = v;
        partner[v] = u;
    }
    let rep = |v: usize| -> usize {
        if partner[v] != usize::MAX {
            v.min(partner[v])
        } else {
            v
        }
    };
    let mut reps: Vec<usize> = (0..n).map(rep).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    reps.dedup();
    let mut rep_index = vec![usize::MAX; n];
    for (i, &r) in reps.iter().enumerate() {
        rep_index[r] = i;
    }
    let forward: Vec<usize> = (0..n).map(|v| rep_index[rep(v)]).collect();
    let mut backward = vec![Vec::new(); reps.len()];
    for v in 0..n {
        backward[forward[v]].push(v);
    }
    let mut edges = std::collections::BTreeSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (forward[u], forward[v]);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let target = Graph::new(reps.len(), &edges)?;
    Ok(ContractionMap {
        matching: matching.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect(),
        target,
        forward,
        backward,
    })
}

pub fn project_set(cm: &ContractionMap, x: &VSet) -> VSet {
    let mut out = VSet::empty(cm.target.n());
    for v in x.iter() {
        out.insert(cm.forward[v]);
    }
    out
}

/// Maximal source set projecting to x': the full preimage.
pub fn expand_set(cm: &ContractionMap, x: &VSet) -> VSet {
    let mut out = VSet::empty(cm.forward.len());
    for (v, &fv) in cm.forward.iter().enumerate() {
        if x.contains(fv) {
            out.insert(v);
        }
    }
    out
}

/// Project a separation of the source into the target: the separator image
/// keeps any merged vertex one of whose endpoints was in S; the sides are the
/// remaining images.
pub fn project_separation(cm: &ContractionMap, sep: &Separation) -> Separation {
    let s = project_set(cm, &sep.s);
    let mut y = project_set(cm, &sep.y);
    y.subtract(&s);
    let mut z = project_set(cm, &sep.z);
    z.subtract(&s);
    debug_assert!(y.is_disjoint(&z), "matching edge between Y and Z");
    Separation::new_unchecked(y, s, z)
}

/// The tangle induced on the target by contracting a subset of the tangle's
/// crossedges: computed by enumerating target tangles and filtering to those
/// containing the projection of every member. More than one match would
/// falsify the construction and is reported as a violation.
pub fn induced_tangle(g: &Graph, t: &Tangle, l: &[(usize, usize)]) -> Result<(ContractionMap, Tangle)> {
    let cross = crate::tangle::crossedges(g, t)?;
    for &(u, v) in l {
        let e = (u.min(v), u.max(v));
        if !cross.contains(&e) {
            return Err(Error::Invalid(format!("({u},{v}) is not a crossedge of the tangle")));
        }
    }
    let cm = contract_matching(g, l)?;
    let candidates = enumerate_tangles(&cm.target, t.k)?;
    let projected: Vec<Separation> = t
        .proper_members()
        .iter()
        .map(|s| project_separation(&cm, s))
        .collect();
    let matches: Vec<Tangle> = candidates
        .into_iter()
        .filter(|cand| projected.iter().all(|p| cand.contains(p)))
        .collect();
    match matches.len() {
        0 => Err(Error::Violation("no target tangle contains the projection".into())),
        1 => Ok((cm, matches.into_iter().next().unwrap())),
        _ => Err(Error::Violation("projection fails to pin down a unique target tangle".into())),
    }
}
