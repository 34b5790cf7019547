//! Contract the crossedges of a tangle one at a time and watch the tangle
//! survive. The host is the truncated K4 (every vertex of K4 blown up into
//! a triangle): planar, 3-connected, with a single order-4 tangle whose six
//! crossedges contract onto the octahedron.
//!
//! ```bash
//! cargo run --example crossedge_contraction
//! ```

use tangleforge::contraction::induced_tangle;
use tangleforge::graph::{complete_graph, Graph};
use tangleforge::symmetry::find_isomorphism;
use tangleforge::tangle::{crossedges, enumerate_tangles, validate_tangle};

/// K4 with each vertex replaced by a triangle, one corner per port.
fn truncated_k4() -> Graph {
    let k4 = complete_graph(4);
    let port = |v: usize, w: usize| {
        3 * v + k4.neighbors(v).iter().position(|&x| x == w).unwrap()
    };
    let mut edges = Vec::new();
    for v in 0..4 {
        for a in 0..3 {
            edges.push((3 * v + a, 3 * v + (a + 1) % 3));
        }
    }
    for (u, v) in k4.edges() {
        edges.push((port(u, v), port(v, u)));
    }
    let edges: Vec<(usize, usize)> =
        edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    Graph::new(12, &edges).unwrap()
}

fn main() -> tangleforge::Result<()> {
    let mut g = truncated_k4();
    let mut t = enumerate_tangles(&g, 4)?.remove(0);
    println!("truncated K4: n={} m={}", g.n(), g.m());

    loop {
        let ce = crossedges(&g, &t)?;
        println!("n={:2}: {} crossedges {:?}", g.n(), ce.len(), ce);
        let Some(&e) = ce.first() else { break };
        let (cm, next) = induced_tangle(&g, &t, &[e])?;
        validate_tangle(&cm.target, &next)?;
        g = cm.target;
        t = next;
    }

    // The fully contracted graph is the octahedron: K6 minus a matching.
    let mut oct_edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                oct_edges.push((u, v));
            }
        }
    }
    let octahedron = Graph::new(6, &oct_edges)?;
    match find_isomorphism(&g, &octahedron)? {
        Some(iso) => println!("result is the octahedron via {iso:?}"),
        None => println!("result is NOT the octahedron"),
    }
    Ok(())
}
