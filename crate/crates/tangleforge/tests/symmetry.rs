mod common;

use common::*;
use tangleforge::decomposition::{block_cut_tree, TreeDecomposition};
use tangleforge::families::*;
use tangleforge::graph::*;
use tangleforge::oracle::exhaustive_automorphisms;
use tangleforge::symmetry::*;
use tangleforge::vset::VSet;

#[test]
fn automorphism_search_matches_exhaustive_oracle() {
    let mut r = rng(9);
    let mut hosts = vec![cycle_graph(5), path_graph(4), complete_graph(4), bowtie()];
    for _ in 0..30 {
        let n = r.gen_range(2..=7);
        hosts.push(random_graph(&mut r, n, 0.5));
    }
    for g in &hosts {
        let action = automorphisms(g).unwrap();
        for p in &action.generators {
            assert!(is_automorphism(g, p));
        }
        // The oracle includes the identity; the production group does not.
        assert_eq!(
            action.generators.len() + 1,
            exhaustive_automorphisms(g).unwrap().len(),
            "group size differs on {}",
            graph6_encode(g)
        );
    }
}

use rand::Rng as _;

#[test]
fn dihedral_cycle_action_closure() {
    let fam = cycle_family(7).unwrap();
    assert_eq!(fam.action.order().unwrap(), 14);
    assert_eq!(vertex_orbits(&fam.action), vec![(0..7).collect::<Vec<_>>()]);
    // The full automorphism group of C7 is the same dihedral group.
    assert_eq!(automorphisms(&fam.graph).unwrap().generators.len() + 1, 14);
}

#[test]
fn triangle_torus_is_vertex_transitive() {
    let fam = hex_tri_torus(3, 3).unwrap();
    let g = &fam.graph;
    // Translations have one orbit per position inside the fundamental cell.
    let orbits = vertex_orbits(&fam.action);
    assert_eq!(orbits.len(), 6);
    assert!(orbits.iter().all(|o| o.len() == 9));
    // A rooted automorphism onto a representative of every translation
    // orbit merges all six into one: the graph is vertex-transitive.
    for orbit in &orbits {
        let target = orbit[0];
        let p = rooted_automorphism(g, 0, target)
            .unwrap_or_else(|| panic!("no automorphism mapping 0 to {target}"));
        assert!(is_automorphism(g, &p));
    }
}

/// Small backtracking search for an automorphism with a prescribed image of
/// one root vertex; enough for the transitivity checks on family instances.
fn rooted_automorphism(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = g.n();
    // Map vertices in breadth-first order from the root so that each new
    // vertex has a mapped neighbor constraining its image.
    let mut order = vec![from];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[from] = to;
    used[to] = true;
    fn go(g: &Graph, order: &[usize], idx: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        if map[v] != usize::MAX {
            return go(g, order, idx + 1, map, used);
        }
        for w in 0..g.n() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            let ok = g.neighbors(v).iter().all(|&x| map[x] == usize::MAX || g.has_edge(w, map[x]))
                && (0..g.n()).all(|x| {
                    map[x] == usize::MAX || g.has_edge(v, x) == g.has_edge(w, map[x])
                });
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if go(g, order, idx + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    go(g, &order, 0, &mut map, &mut used).then(|| map.to_vec())
}

#[test]
fn gadget_torus_wiring() {
    let (p, q) = (3, 3);
    let fam = tri_gadget_torus(p, q).unwrap();
    let g = &fam.graph;
    assert_eq!(g.n(), 9 * p * q);
    // Grid vertices come first and all share one degree; each face gadget
    // has three middle vertices of degree 4 and an apex of degree 3.
    let grid_deg = g.degree(0);
    for v in 0..p * q {
        assert_eq!(g.degree(v), grid_deg);
    }
    let mut apex_count = 0;
    for v in p * q..g.n() {
        match g.degree(v) {
            3 => apex_count += 1,
            4 => {}
            d => panic!("gadget vertex {v} has degree {d}"),
        }
    }
    assert_eq!(apex_count, 2 * p * q);
    // Each apex with its three middles and their common face triangle wires
    // a complete bipartite K3,3 between middles and face vertices.
    for z in (p * q..g.n()).filter(|&v| g.degree(v) == 3) {
        let middles: Vec<usize> = g.neighbors(z).to_vec();
        assert_eq!(middles.len(), 3);
        let face: Vec<usize> =
            g.neighbors(middles[0]).iter().copied().filter(|&x| x != z).collect();
        assert_eq!(face.len(), 3);
        for &m in &middles {
            for &f in &face {
                assert!(g.has_edge(m, f));
            }
        }
        // The face triangle is a triangle of grid vertices.
        for (i, &a) in face.iter().enumerate() {
            assert!(a < p * q);
            for &b in &face[i + 1..] {
                assert!(g.has_edge(a, b));
            }
        }
    }
    // Translations act with 9 vertex orbits: one grid orbit and four gadget
    // orbits per face type.
    assert_eq!(vertex_orbits(&fam.action).len(), 9);
}

#[test]
fn canonicity_of_decompositions() {
    // The block-cut tree of the bowtie is preserved by the swap of the two
    // triangles.
    let g = bowtie();
    let td = block_cut_tree(&g).unwrap();
    let action = automorphisms(&g).unwrap();
    let witnesses = is_canonical_td(&td, &action).unwrap();
    assert_eq!(witnesses.len(), action.generators.len());
    let orbits = tree_edge_orbits(&td, &witnesses);
    assert_eq!(orbits.len(), 1);
    // A path decomposition of C4 is not invariant under rotation.
    let c4 = cycle_graph(4);
    let td = TreeDecomposition {
        host_n: 4,
        bags: vec![VSet::from_iter(4, [0, 1, 3]), VSet::from_iter(4, [1, 2, 3])],
        tree_edges: vec![(0, 1)],
    };
    let rot = GroupAction::new(&c4, vec![vec![1, 2, 3, 0]]).unwrap();
    assert_eq!(is_canonical_td(&td, &rot), Err(0));
    // The trivial decomposition is canonical under anything.
    let trivial = TreeDecomposition::trivial(&c4);
    assert!(is_canonical_td(&trivial, &rot).is_ok());
}

#[test]
fn invariant_families_and_orbits() {
    let fam = hex_tri_torus(3, 3).unwrap();
    let g = &fam.graph;
    let t = tangleforge::tangle::enumerate_tangles(g, 4).unwrap().remove(0);
    let nd = tangleforge::tangle::nondegenerate_minimal(g, &t).unwrap();
    assert!(invariant_family(&fam.action, &nd));
    // The 18 triangle separations form two translation orbits, one per
    // sublattice of 9 triangles.
    let orbits = separation_orbits(&fam.action, &nd);
    assert_eq!(orbits.len(), 2);
    assert!(orbits.iter().all(|o| o.len() == 9));
}
