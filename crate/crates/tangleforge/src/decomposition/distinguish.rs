//! A canonical tree-decomposition every edge of which efficiently
//! distinguishes a pair of the given tangles. The candidate pool is the set
//! of efficient distinguishers of all pairs, closed under the group action;
//! from it a maximal nested invariant subfamily is extracted orbit by orbit.

use super::nested::td_from_nested_family;
use super::td::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{is_degenerate, nested, Separation};
use crate::symmetry::{apply_to_separation, GroupAction};
use crate::tangle::{efficiently_distinguishes, efficient_distinguishers, Tangle};
use std::collections::BTreeMap;

/// Orbit count above which the exhaustive fallback refuses to run.
const EXHAUSTIVE_ORBIT_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct DistinguishReport {
    /// The nested invariant family whose tree-decomposition was returned.
    pub family: Vec<Separation>,
    /// Whether the greedy pass failed and the exhaustive fallback ran.
    pub fallback_used: bool,
}

pub fn tangle_distinguishing_td(
    g: &Graph,
    tangles: &[Tangle],
    action: &GroupAction,
) -> Result<(TreeDecomposition, DistinguishReport)> {
    if tangles.len() <= 1 {
        return Ok((
            TreeDecomposition::trivial(g),
            DistinguishReport { family: Vec::new(), fallback_used: false },
        ));
    }

    // Pool: efficient distinguishers of every pair, neither orientation
    // degenerate, deduplicated under reversal, then closed under the action.
    let mut pool: BTreeMap<(Vec<usize>, Vec<usize>), Separation> = BTreeMap::new();
    let add = |sep: &Separation, pool: &mut BTreeMap<(Vec<usize>, Vec<usize>), Separation>| {
        let rev = sep.reverse();
        let key = sep.canonical_key().min(rev.canonical_key());
        let canon = if sep.canonical_key() <= rev.canonical_key() { sep.clone() } else { rev };
        pool.entry(key).or_insert(canon);
    };
    for (i, t1) in tangles.iter().enumerate() {
        for t2 in &tangles[i + 1..] {
            for sep in efficient_distinguishers(t1, t2) {
                if !is_degenerate(g, &sep) && !is_degenerate(g, &sep.reverse()) {
                    add(&sep, &mut pool);
                }
            }
        }
    }
    loop {
        let snapshot: Vec<Separation> = pool.values().cloned().collect();
        let before = pool.len();
        for p in &action.generators {
            for sep in &snapshot {
                add(&apply_to_separation(p, sep), &mut pool);
            }
        }
        if pool.len() == before {
            break;
        }
    }
    let pool: Vec<Separation> = pool.into_values().collect();

    // Orbits of the pool under the action, in canonical order.
    let orbits = pool_orbits(&pool, action);

    let distinguishes_all = |family: &[Separation]| -> bool {
        for (i, t1) in tangles.iter().enumerate() {
            for t2 in &tangles[i + 1..] {
                if !family.iter().any(|s| efficiently_distinguishes(s, t1, t2)) {
                    return false;
                }
            }
        }
        true
    };
    let orbit_nested = |accepted: &[usize], cand: usize| -> bool {
        let all = |a: &[Separation], b: &[Separation]| {
            a.iter().all(|x| b.iter().all(|y| nested(x, y)))
        };
        all(&orbits[cand], &orbits[cand])
            && accepted.iter().all(|&i| all(&orbits[i], &orbits[cand]))
    };
    let family_of = |chosen: &[usize]| -> Vec<Separation> {
        chosen.iter().flat_map(|&i| orbits[i].iter().cloned()).collect()
    };

    // Greedy pass over orbits in canonical order.
    let mut accepted: Vec<usize> = Vec::new();
    for i in 0..orbits.len() {
        if orbit_nested(&accepted, i) {
            accepted.push(i);
        }
    }
    let mut fallback_used = false;
    if !distinguishes_all(&family_of(&accepted)) {
        fallback_used = true;
        if orbits.len() > EXHAUSTIVE_ORBIT_CAP {
            return Err(Error::Budget(format!(
                "exhaustive orbit search refused: {} orbits",
                orbits.len()
            )));
        }
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u64..1 << orbits.len() {
            let chosen: Vec<usize> =
                (0..orbits.len()).filter(|&i| mask >> i & 1 == 1).collect();
            let mut ok = true;
            let mut acc: Vec<usize> = Vec::new();
            for &i in &chosen {
                if !orbit_nested(&acc, i) {
                    ok = false;
                    break;
                }
                acc.push(i);
            }
            if ok && distinguishes_all(&family_of(&chosen)) {
                let better = match &best {
                    None => true,
                    Some(b) => chosen.len() > b.len(),
                };
                if better {
                    best = Some(chosen);
                }
            }
        }
        match best {
            Some(b) => accepted = b,
            None => {
                return Err(Error::Violation(
                    "no nested invariant subfamily distinguishes all tangle pairs".into(),
                ))
            }
        }
    }

    let family = family_of(&accepted);
    let td = td_from_nested_family(g, &family)?;
    Ok((td, DistinguishReport { family, fallback_used }))
}

fn pool_orbits(pool: &[Separation], action: &GroupAction) -> Vec<Vec<Separation>> {
    let key = |s: &Separation| s.canonical_key().min(s.reverse().canonical_key());
    let index: BTreeMap<_, usize> =
        pool.iter().enumerate().map(|(i, s)| (key(s), i)).collect();
    let mut seen = vec![false; pool.len()];
    let mut out: Vec<Vec<Separation>> = Vec::new();
    for i in 0..pool.len() {
        if seen[i] {
            continue;
        }
        let mut orbit = vec![i];
        seen[i] = true;
        let mut at = 0;
        while at < orbit.len() {
            let cur = orbit[at];
            for p in &action.generators {
                let img = apply_to_separation(p, &pool[cur]);
                if let Some(&j) = index.get(&key(&img)) {
                    if !seen[j] {
                        seen[j] = true;
                        orbit.push(j);
                    }
                }
            }
            at += 1;
        }
        orbit.sort_unstable();
        out.push(orbit.into_iter().map(|j| pool[j].clone()).collect());
    }
    // Canonical order by the least member key.
    out.sort_by_key(|orbit| orbit.iter().map(|s| key(s)).min().unwrap());
    out
}
