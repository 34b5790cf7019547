//! Build the canonical tree-decomposition that distinguishes all tangles of
//! the gadget torus: a star whose center bag is the underlying triangular
//! grid and whose leaves are the 7-vertex gadgets.
//!
//! ```bash
//! cargo run --example distinguishing_star
//! ```

use tangleforge::decomposition::{edge_separation, tangle_distinguishing_td, validate_td};
use tangleforge::families::tri_gadget_torus;
use tangleforge::symmetry::{is_canonical_td, tree_edge_orbits};
use tangleforge::tangle::enumerate_tangles;

fn main() -> tangleforge::Result<()> {
    let (p, q) = (3, 3);
    let fam = tri_gadget_torus(p, q)?;
    let g = &fam.graph;
    println!("gadget torus {p}x{q}: n={} m={}", g.n(), g.m());

    let tangles = enumerate_tangles(g, 4)?;
    println!("order-4 tangles: {}", tangles.len());

    let (td, report) = tangle_distinguishing_td(g, &tangles, &fam.action)?;
    validate_td(g, &td)?;
    println!(
        "distinguishing decomposition: {} bags, adhesion {}, fallback={}",
        td.bags.len(),
        td.adhesion(),
        report.fallback_used
    );
    let center = td.bags.iter().position(|b| b.len() == p * q).unwrap();
    println!("center bag (the grid): {:?}", td.bags[center].to_vec());
    println!("leaf bags: {} of size 7 each", td.bags.len() - 1);
    for e in 0..3.min(td.tree_edges.len()) {
        let sep = edge_separation(&td, e);
        println!("  edge {e} separation: S={:?} small side {:?}",
            sep.s.to_vec(), sep.y.to_vec());
    }

    // Invariance under the torus translations, with one witness per
    // generator; the tree edges fall into translation orbits.
    let witnesses = is_canonical_td(&td, &fam.action).expect("star should be canonical");
    let orbits = tree_edge_orbits(&td, &witnesses);
    println!("canonical under translations; {} tree-edge orbit(s)", orbits.len());
    Ok(())
}
