//! Decompose graphs into quasi-4-connected torsos over adhesion-3 gluing.
//! Quasi-4-connected means 3-connected and every order-3 separation cuts
//! off at most a single vertex.
//!
//! ```bash
//! cargo run --example quasi4_decomposition
//! ```

use tangleforge::decomposition::{grohe_decomposition, validate_td};
use tangleforge::graph::{complete_graph, graph6_encode, is_quasi_4_connected, torso, Graph};

fn show(name: &str, g: &Graph) -> tangleforge::Result<()> {
    let td = grohe_decomposition(g)?;
    let report = validate_td(g, &td)?;
    println!("{name}: n={} -> {} bags, width {}, adhesion {}",
        g.n(), td.bags.len(), report.width, report.adhesion);
    for bag in &td.bags {
        let (t, _) = torso(g, bag)?;
        let kind = if t.n() <= 4 {
            "small"
        } else if is_quasi_4_connected(&t) {
            "quasi-4-connected"
        } else {
            "UNEXPECTED"
        };
        println!("  torso {:?}: {kind}", bag.to_vec());
    }
    Ok(())
}

fn main() -> tangleforge::Result<()> {
    // Two K5 blobs sharing a triangle: splits along the shared 3-separator.
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push((u, v));
        }
    }
    for u in 2..7 {
        for v in u + 1..7 {
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    show("two glued K5", &Graph::new(7, &edges)?)?;

    show("K5 alone", &complete_graph(5))?;

    // A sparse graph falls apart into small torsos.
    let sparse = Graph::new(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (6, 7)])?;
    println!("(graph6 {})", graph6_encode(&sparse));
    show("sparse sample", &sparse)?;
    Ok(())
}
