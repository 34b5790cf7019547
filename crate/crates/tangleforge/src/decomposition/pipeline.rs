//! Refinement of tree-decompositions, region stars around a tangle, and the
//! two top-level pipelines: the quasi-4-connectivity pipeline (non-canonical
//! endpoint choices, treewidth fallback, cycle fans) and the canonical
//! structure pipeline (both crossedge endpoints kept, torsos left whole when
//! no further canonical split applies).

use super::distinguish::tangle_distinguishing_td;
use super::td::{validate_td, TreeDecomposition};
use super::treewidth::{treewidth_exact_small, TREEWIDTH_CAP};
use super::tutte::tutte_decomposition;
use crate::contraction::contract_matching;
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, is_quasi_4_connected, torso, Graph};
use crate::symmetry::{automorphisms, GroupAction};
use crate::tangle::{crossedges, enumerate_tangles, region_r, Tangle};
use crate::vset::VSet;

// ---------------------------------------------------------------------------
// Refinement
// ---------------------------------------------------------------------------

/// Replace each node of `base` by a tree-decomposition of its torso (None
/// keeps the node as-is). Part bags are over host vertex ids. Each part is
/// validated against its torso; original tree edges reattach at the part
/// node that contains the adhesion set, preferring the largest such bag.
pub fn refine_td(
    g: &Graph,
    base: &TreeDecomposition,
    parts: &[Option<TreeDecomposition>],
) -> Result<TreeDecomposition> {
    if parts.len() != base.bags.len() {
        return Err(Error::Invalid("one part per node required".into()));
    }
    let mut bags: Vec<VSet> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    // Node ranges per original node.
    let mut offset = Vec::new();
    let mut counts = Vec::new();
    for (t, part) in parts.iter().enumerate() {
        offset.push(bags.len());
        match part {
            None => {
                bags.push(base.bags[t].clone());
                counts.push(1);
            }
            Some(p) => {
                let mut union = VSet::empty(g.n());
                for b in &p.bags {
                    union.union_with(b);
                }
                if union != base.bags[t] {
                    return Err(Error::Invalid(format!(
                        "part of node {t} does not cover exactly its bag"
                    )));
                }
                let (tg, map) = torso(g, &base.bags[t])?;
                let mut inv = vec![usize::MAX; g.n()];
                for (local, &orig) in map.iter().enumerate() {
                    inv[orig] = local;
                }
                let local = TreeDecomposition {
                    host_n: tg.n(),
                    bags: p
                        .bags
                        .iter()
                        .map(|b| VSet::from_iter(tg.n(), b.iter().map(|v| inv[v])))
                        .collect(),
                    tree_edges: p.tree_edges.clone(),
                };
                validate_td(&tg, &local)?;
                let base_len = bags.len();
                bags.extend(p.bags.iter().cloned());
                tree_edges
                    .extend(p.tree_edges.iter().map(|&(a, b)| (base_len + a, base_len + b)));
                counts.push(p.bags.len());
            }
        }
    }
    let attach = |t: usize, adhesion: &VSet, bags: &[VSet]| -> Result<usize> {
        let candidates: Vec<usize> = (offset[t]..offset[t] + counts[t])
            .filter(|&i| adhesion.is_subset(&bags[i]))
            .collect();
        candidates
            .into_iter()
            .max_by_key(|&i| (bags[i].len(), usize::MAX - i))
            .ok_or_else(|| {
                Error::Invalid(format!("no part bag of node {t} contains the adhesion set"))
            })
    };
    for &(a, b) in &base.tree_edges {
        let adhesion = base.bags[a].intersection(&base.bags[b]);
        let na = attach(a, &adhesion, &bags)?;
        let nb = attach(b, &adhesion, &bags)?;
        tree_edges.push((na, nb));
    }
    let td = TreeDecomposition { host_n: g.n(), bags, tree_edges };
    validate_td(g, &td)?;
    Ok(td)
}

// ---------------------------------------------------------------------------
// Region stars
// ---------------------------------------------------------------------------

fn star_around(g: &Graph, center: &VSet) -> TreeDecomposition {
    let rest = center.complement();
    let mut bags = vec![center.clone()];
    let mut tree_edges = Vec::new();
    for comp in g.components_within(&rest) {
        let mut bag = comp.clone();
        bag.union_with(&g.neighborhood(&comp));
        tree_edges.push((0, bags.len()));
        bags.push(bag);
    }
    TreeDecomposition { host_n: g.n(), bags, tree_edges }
}

/// Star with the tangle's region as center; leaves are the components of the
/// complement together with their neighborhoods.
pub fn region_star_td(g: &Graph, t: &Tangle) -> Result<TreeDecomposition> {
    let r = region_r(g, t)?;
    let td = star_around(g, &r);
    validate_td(g, &td)?;
    Ok(td)
}

/// Star with one crossedge endpoint per crossedge removed from the region
/// (the lower-indexed endpoint is kept; this choice is deliberately not
/// equivariant).
pub fn grohe_region_star_td(g: &Graph, t: &Tangle) -> Result<TreeDecomposition> {
    let mut x = region_r(g, t)?;
    for (_, hi) in crossedges(g, t)? {
        x.remove(hi);
    }
    let td = star_around(g, &x);
    validate_td(g, &td)?;
    Ok(td)
}

// ---------------------------------------------------------------------------
// Quasi-4-connectivity pipeline
// ---------------------------------------------------------------------------

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

fn cycle_order(g: &Graph) -> Vec<usize> {
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    loop {
        let cur = *order.last().unwrap();
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
        if next == 0 {
            return order;
        }
        prev = cur;
        order.push(next);
    }
}

/// Triangle fan of a cycle: bags (c0, ci, ci+1) along the cycle.
fn fan_td(g: &Graph) -> TreeDecomposition {
    let c = cycle_order(g);
    let n = c.len();
    let bags: Vec<VSet> = (1..n - 1)
        .map(|i| VSet::from_iter(g.n(), [c[0], c[i], c[i + 1]]))
        .collect();
    let tree_edges = (0..bags.len().saturating_sub(1)).map(|i| (i, i + 1)).collect();
    TreeDecomposition { host_n: g.n(), bags, tree_edges }
}

fn refine_recursively(
    g: &Graph,
    base: &TreeDecomposition,
    handler: &impl Fn(&Graph) -> Result<Option<TreeDecomposition>>,
) -> Result<TreeDecomposition> {
    let mut parts = Vec::new();
    for bag in &base.bags {
        if bag == &g.vertex_set() {
            // The torso of a full bag is the host itself; recursing on it
            // cannot shrink the instance, so such a bag stays whole.
            parts.push(None);
            continue;
        }
        let (tg, map) = torso(g, bag)?;
        let part = handler(&tg)?.map(|td| TreeDecomposition {
            host_n: g.n(),
            bags: td
                .bags
                .iter()
                .map(|b| VSet::from_iter(g.n(), b.iter().map(|v| map[v])))
                .collect(),
            tree_edges: td.tree_edges,
        });
        parts.push(part);
    }
    refine_td(g, base, &parts)
}

fn grohe_torso(h: &Graph) -> Result<Option<TreeDecomposition>> {
    if h.n() <= 4 {
        return Ok(None);
    }
    if is_cycle(h) {
        return Ok(Some(fan_td(h)));
    }
    let base = tutte_decomposition(h)?;
    if base.bags.len() > 1 {
        return Ok(Some(refine_recursively(h, &base, &grohe_torso)?));
    }
    if !is_k_connected(h, 3) {
        return Err(Error::Violation(
            "order-2 decomposition left a non-3-connected non-cycle torso whole".into(),
        ));
    }
    if is_quasi_4_connected(h) {
        return Ok(None);
    }
    let tangles = enumerate_tangles(h, 4)?;
    match tangles.len() {
        0 => {
            // No order-4 tangle on a 3-connected non-quasi-4-connected
            // graph forces small treewidth; decompose into bags of size
            // at most 4.
            if h.n() > TREEWIDTH_CAP {
                return Err(Error::Budget("tangle-free torso too large for treewidth fallback".into()));
            }
            let (w, td) = treewidth_exact_small(h)?;
            if w > 3 {
                return Err(Error::Violation(format!(
                    "tangle-free 3-connected torso has treewidth {w} > 3"
                )));
            }
            Ok(Some(td))
        }
        1 => {
            let star = grohe_region_star_td(h, &tangles[0])?;
            if star.bags.len() == 1 {
                return Ok(None);
            }
            Ok(Some(refine_recursively(h, &star, &grohe_torso)?))
        }
        _ => {
            let (d, _) = tangle_distinguishing_td(h, &tangles, &GroupAction::trivial(h.n()))?;
            if d.bags.len() == 1 {
                return Err(Error::Violation(
                    "distinguishing decomposition failed to split a multi-tangle torso".into(),
                ));
            }
            Ok(Some(refine_recursively(h, &d, &grohe_torso)?))
        }
    }
}

/// Decompose along the order-2 canonical decomposition, then split every
/// large torso until each piece is quasi-4-connected, a triangle fan piece,
/// or of size at most 4. Not canonical: crossedge endpoint choices and the
/// tangle-distinguishing pass ignore symmetry.
pub fn grohe_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    Ok(grohe_torso(g)?.unwrap_or_else(|| TreeDecomposition::trivial(g)))
}

// ---------------------------------------------------------------------------
// Canonical structure pipeline
// ---------------------------------------------------------------------------

fn structure_torso(h: &Graph, action: &GroupAction) -> Result<Option<TreeDecomposition>> {
    if h.n() <= 4 {
        return Ok(None);
    }
    let base = tutte_decomposition(h)?;
    if base.bags.len() > 1 {
        return Ok(Some(refine_recursively(h, &base, &|sub| {
            structure_torso(sub, &sub_action(sub))
        })?));
    }
    if !is_k_connected(h, 3) || is_quasi_4_connected(h) {
        return Ok(None);
    }
    let tangles = enumerate_tangles(h, 4)?;
    match tangles.len() {
        0 => Ok(None),
        1 => {
            let star = region_star_td(h, &tangles[0])?;
            if star.bags.len() == 1 {
                return Ok(None);
            }
            Ok(Some(refine_recursively(h, &star, &|sub| {
                structure_torso(sub, &sub_action(sub))
            })?))
        }
        _ => {
            let (d, _) = tangle_distinguishing_td(h, &tangles, action)?;
            if d.bags.len() == 1 {
                return Err(Error::Violation(
                    "distinguishing decomposition failed to split a multi-tangle torso".into(),
                ));
            }
            Ok(Some(refine_recursively(h, &d, &|sub| {
                structure_torso(sub, &sub_action(sub))
            })?))
        }
    }
}

/// Automorphisms of a sub-torso when affordable, otherwise no symmetry.
fn sub_action(h: &Graph) -> GroupAction {
    automorphisms(h).unwrap_or_else(|_| GroupAction::trivial(h.n()))
}

#[derive(Clone, Debug)]
pub struct TorsoReport {
    pub bag: Vec<usize>,
    pub quasi_4_connected: bool,
    pub planar: bool,
    /// Quasi-4-connectivity after contracting the crossedges of the unique
    /// order-4 tangle, when there is one.
    pub contracted_quasi_4_connected: Option<bool>,
    /// Exact treewidth for torsos within the search cap.
    pub treewidth: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub torsos: Vec<TorsoReport>,
}

/// Canonical decomposition: the order-2 canonical decomposition refined by
/// region stars and canonical tangle-distinguishing splits. The action is
/// used for orbit selection when the whole graph is a single torso; proper
/// sub-torsos fall back to their own automorphism groups.
pub fn structure_decomposition(
    g: &Graph,
    action: &GroupAction,
) -> Result<(TreeDecomposition, StructureReport)> {
    let td = structure_torso(g, action)?.unwrap_or_else(|| TreeDecomposition::trivial(g));
    let mut torsos = Vec::new();
    for bag in &td.bags {
        let (tg, _map) = torso(g, bag)?;
        let q4c = is_quasi_4_connected(&tg);
        let planar = crate::planarity::is_planar(&tg)?;
        let contracted = if !q4c && tg.n() >= 5 && is_k_connected(&tg, 3) {
            match enumerate_tangles(&tg, 4) {
                Ok(ts) if ts.len() == 1 => {
                    let cross = crossedges(&tg, &ts[0])?;
                    let cm = contract_matching(&tg, &cross)?;
                    Some(is_quasi_4_connected(&cm.target))
                }
                _ => None,
            }
        } else {
            None
        };
        let tw = if tg.n() <= TREEWIDTH_CAP {
            Some(treewidth_exact_small(&tg)?.0)
        } else {
            None
        };
        torsos.push(TorsoReport {
            bag: bag.to_vec(),
            quasi_4_connected: q4c,
            planar,
            contracted_quasi_4_connected: contracted,
            treewidth: tw,
        });
    }
    Ok((td, StructureReport { torsos }))
}
