mod common;

use tangleforge::contraction::*;
use tangleforge::families::hex_tri_torus;
use tangleforge::graph::cycle_graph;
use tangleforge::separation::Separation;
use tangleforge::tangle::{crossedges, enumerate_tangles, validate_tangle};
use tangleforge::vset::VSet;

#[test]
fn matching_contraction_basics() {
    let g = cycle_graph(6);
    let cm = contract_matching(&g, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(cm.target.n(), 4);
    assert_eq!(cm.target.m(), 4);
    // Forward map is onto, backward is its exact fiber.
    for (v, fibers) in cm.backward.iter().enumerate() {
        for &u in fibers {
            assert_eq!(cm.forward[u], v);
        }
    }
    // Non-edges and overlapping pairs are rejected.
    assert!(contract_matching(&g, &[(0, 2)]).is_err());
    assert!(contract_matching(&g, &[(0, 1), (1, 2)]).is_err());
}

#[test]
fn set_projection_round_trips() {
    let g = cycle_graph(6);
    let cm = contract_matching(&g, &[(0, 1), (3, 4)]).unwrap();
    let x = VSet::from_iter(6, [0, 2, 3]);
    let projected = project_set(&cm, &x);
    let expanded = expand_set(&cm, &projected);
    // Expansion is the maximal preimage: it contains x and projects back.
    assert!(x.is_subset(&expanded));
    assert_eq!(project_set(&cm, &expanded), projected);
    // Sets saturated by the matching expand to themselves.
    let saturated = VSet::from_iter(6, [0, 1, 2]);
    assert_eq!(expand_set(&cm, &project_set(&cm, &saturated)), saturated);
}

#[test]
fn separation_projection_keeps_separator_side() {
    // Path 0-1-2-3-4-5 with separation ({0,1},{2},{3,4,5}); contracting the
    // edge (1,2) merges a side vertex into the separator.
    let g = tangleforge::graph::path_graph(6);
    let sep = Separation::new(
        &g,
        VSet::from_iter(6, [0, 1]),
        VSet::from_iter(6, [2]),
        VSet::from_iter(6, [3, 4, 5]),
    )
    .unwrap();
    let cm = contract_matching(&g, &[(1, 2)]).unwrap();
    let p = project_separation(&cm, &sep);
    assert_eq!(p.s.to_vec(), vec![cm.forward[2]]);
    assert_eq!(p.y.to_vec(), vec![cm.forward[0]]);
    assert_eq!(p.order(), 1);
}

#[test]
fn induced_tangle_requires_crossedges() {
    let fam = hex_tri_torus(3, 3).unwrap();
    let g = &fam.graph;
    let t = enumerate_tangles(g, 4).unwrap().remove(0);
    // A triangle edge is not a crossedge.
    assert!(induced_tangle(g, &t, &[(0, 1)]).is_err());
}

#[test]
fn induced_tangle_survives_and_validates() {
    let fam = hex_tri_torus(3, 3).unwrap();
    let g = &fam.graph;
    let t = enumerate_tangles(g, 4).unwrap().remove(0);
    let ce = crossedges(g, &t).unwrap();
    let l = [ce[0], ce[5]];
    let (cm, induced) = induced_tangle(g, &t, &l).unwrap();
    validate_tangle(&cm.target, &induced).unwrap();
    // Surviving crossedges are the images of the uncontracted ones.
    let mut expect: Vec<(usize, usize)> = ce
        .iter()
        .filter(|e| !l.contains(e))
        .map(|&(u, v)| {
            let (a, b) = (cm.forward[u], cm.forward[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    expect.sort();
    let mut got = crossedges(&cm.target, &induced).unwrap();
    got.sort();
    assert_eq!(got, expect);
}

#[test]
fn single_edge_contraction_orders_commute() {
    let fam = hex_tri_torus(3, 3).unwrap();
    let g = &fam.graph;
    let t = enumerate_tangles(g, 4).unwrap().remove(0);
    let ce = crossedges(g, &t).unwrap();
    let (e1, e2) = (ce[0], ce[1]);
    let via = |first: (usize, usize), second: (usize, usize)| {
        let (cm1, t1) = induced_tangle(g, &t, &[first]).unwrap();
        let s2 = (cm1.forward[second.0], cm1.forward[second.1]);
        let (cm2, t2) = induced_tangle(&cm1.target, &t1, &[s2]).unwrap();
        // Normalize by the composed fiber of every final vertex.
        let fibers: Vec<Vec<usize>> = cm2
            .backward
            .iter()
            .map(|f| {
                let mut orig: Vec<usize> =
                    f.iter().flat_map(|&m| cm1.backward[m].iter().copied()).collect();
                orig.sort();
                orig
            })
            .collect();
        let keys: Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = t2
            .proper_members()
            .iter()
            .map(|s| {
                let lift = |set: &VSet| {
                    let mut v: Vec<Vec<usize>> = set.iter().map(|x| fibers[x].clone()).collect();
                    v.sort();
                    v
                };
                (lift(&s.s), lift(&s.y))
            })
            .collect();
        let mut keys = keys;
        keys.sort();
        keys
    };
    assert_eq!(via(e1, e2), via(e2, e1));
}
