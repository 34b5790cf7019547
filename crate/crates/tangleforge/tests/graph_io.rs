mod common;

use common::*;
use tangleforge::graph::*;
use tangleforge::vset::VSet;

#[test]
fn graph6_known_strings() {
    assert_eq!(graph6_encode(&complete_graph(4)), "C~");
    assert_eq!(graph6_encode(&cycle_graph(5)), "Dhc");
    let g = graph6_decode(b"C~").unwrap();
    assert_eq!(g.n(), 4);
    assert_eq!(g.m(), 6);
}

#[test]
fn graph6_round_trip_random() {
    let mut r = rng(1);
    for _ in 0..60 {
        let n = r.gen_range(1..=12);
        let g = random_graph(&mut r, n, 0.4);
        let back = graph6_decode(graph6_encode(&g).as_bytes()).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edges(), g.edges());
    }
}

use rand::Rng as _;

#[test]
fn edge_list_parsing() {
    let g = parse_edge_list(b"a b\nb c\nc a\n").unwrap();
    assert_eq!(g.n(), 3);
    assert_eq!(g.m(), 3);
    assert_eq!(g.label(0), Some("a"));
    assert!(parse_edge_list(b"a b b").is_err());
    assert!(parse_edge_list(b"a a").is_err());
    assert!(parse_edge_list(b"a b a b").is_err());
}

#[test]
fn load_graph_formats() {
    let g = load_graph(Format::Graph6, b"Dhc").unwrap();
    assert_eq!(g.edges(), cycle_graph(5).edges());
    let h = load_graph(Format::EdgeList, b"0 1\n1 2").unwrap();
    assert_eq!(h.n(), 3);
}

#[test]
fn torso_adds_component_neighborhood_cliques() {
    // Path 0-1-2: deleting 1 makes {0,2} a torso edge.
    let g = path_graph(3);
    let (t, map) = torso(&g, &VSet::from_iter(3, [0, 2])).unwrap();
    assert_eq!(t.n(), 2);
    assert!(t.has_edge(0, 1));
    assert_eq!(map, vec![0, 2]);
    // Star center deleted: all leaves become a clique.
    let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let (t, _) = torso(&star, &VSet::from_iter(4, [1, 2, 3])).unwrap();
    assert_eq!(t.m(), 3);
}

#[test]
fn biconnected_components_of_small_graphs() {
    let mut blocks: Vec<Vec<usize>> =
        biconnected_components(&bowtie()).iter().map(|b| b.to_vec()).collect();
    blocks.sort();
    assert_eq!(blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
    let path = path_graph(4);
    assert_eq!(biconnected_components(&path).len(), 3);
    assert_eq!(biconnected_components(&cycle_graph(6)).len(), 1);
}

#[test]
fn connectivity_predicates() {
    assert!(is_k_connected(&complete_graph(5), 4));
    assert!(!is_k_connected(&complete_graph(5), 5));
    assert!(is_k_connected(&cycle_graph(6), 2));
    assert!(!is_k_connected(&cycle_graph(6), 3));
    assert!(is_k_connected(&petersen(), 3));
    assert!(!is_k_connected(&bowtie(), 2));
}

#[test]
fn quasi_4_connectivity() {
    assert!(is_quasi_4_connected(&complete_graph(5)));
    assert!(is_quasi_4_connected(&petersen()));
    // Wheel on a 5-rim: every 3-separator isolates a single rim vertex.
    assert!(is_quasi_4_connected(&wheel(5)));
    // Wheel on a 6-rim: hub plus two opposite rim vertices leaves two
    // 2-vertex components.
    assert!(!is_quasi_4_connected(&wheel(6)));
    assert!(!is_quasi_4_connected(&cycle_graph(6)));
}

#[test]
fn minor_models_found_and_validated() {
    let k5 = complete_graph(5);
    let k33 = complete_bipartite(3, 3);
    let p = petersen();
    let m = find_minor_model(&p, &k5, false, None).unwrap().expect("K5 minor");
    m.validate(&p, &k5).unwrap();
    let m = find_minor_model(&p, &k33, false, None).unwrap().expect("K3,3 minor");
    m.validate(&p, &k33).unwrap();
    let grid = planar_grid(3, 3);
    assert!(find_minor_model(&grid, &k5, false, None).unwrap().is_none());
    assert!(find_minor_model(&grid, &k33, false, None).unwrap().is_none());
}

#[test]
fn minor_model_faithful_and_rooted() {
    let k5 = complete_graph(5);
    let k4 = complete_graph(4);
    let m = find_minor_model(&k5, &k4, true, None).unwrap().expect("faithful K4");
    assert!(m.is_faithful());
    let p = petersen();
    let m = find_minor_model(&p, &k4, false, Some(&[(0, 7)])).unwrap().expect("rooted K4");
    assert!(m.branch_sets[0].contains(7));
    m.validate(&p, &k4).unwrap();
}

#[test]
fn minor_model_validation_rejects_bad_models() {
    let k4 = complete_graph(4);
    let p = petersen();
    let mut m = find_minor_model(&p, &k4, false, None).unwrap().unwrap();
    // Empty one branch set.
    let saved = m.branch_sets[0].clone();
    m.branch_sets[0] = VSet::empty(p.n());
    assert!(m.validate(&p, &k4).is_err());
    m.branch_sets[0] = saved;
    // Pattern larger than the cap is a budget refusal.
    assert!(matches!(
        find_minor_model(&p, &complete_graph(9), false, None),
        Err(tangleforge::Error::Budget(_))
    ));
}
