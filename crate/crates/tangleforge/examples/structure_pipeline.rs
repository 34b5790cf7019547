//! The full structure pipeline: split a graph into torsos that are
//! quasi-4-connected, planar, or of bounded treewidth, canonically under a
//! supplied symmetry action.
//!
//! ```bash
//! cargo run --example structure_pipeline
//! ```

use tangleforge::decomposition::{structure_decomposition, validate_td};
use tangleforge::families::{cycle_family, hex_tri_torus};
use tangleforge::graph::Graph;
use tangleforge::symmetry::GroupAction;

fn main() -> tangleforge::Result<()> {
    // A cycle is symmetric enough that no invariant split exists: the only
    // canonical decomposition is the trivial one, and the torso is planar
    // of treewidth 2.
    let fam = cycle_family(8)?;
    let (td, report) = structure_decomposition(&fam.graph, &fam.action)?;
    println!("C8 under its dihedral action: {} bag(s)", td.bags.len());
    for t in &report.torsos {
        println!("  torso: planar={} treewidth={:?} quasi4={}",
            t.planar, t.treewidth, t.quasi_4_connected);
    }

    // Same on the vertex-transitive triangle torus.
    let fam = hex_tri_torus(3, 3)?;
    let (td, report) = structure_decomposition(&fam.graph, &fam.action)?;
    println!("triangle torus under translations: {} bag(s)", td.bags.len());
    for t in &report.torsos {
        println!("  torso: planar={} treewidth={:?} quasi4={}",
            t.planar, t.treewidth, t.quasi_4_connected);
    }

    // An asymmetric composite graph decomposes along blocks and
    // 2-separators first.
    let g = Graph::new(
        8,
        &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3), (4, 6), (6, 7), (7, 4)],
    )?;
    let (td, report) = structure_decomposition(&g, &GroupAction::trivial(g.n()))?;
    validate_td(&g, &td)?;
    println!("composite graph: {} bags, {} torso reports", td.bags.len(), report.torsos.len());
    for (bag, t) in td.bags.iter().zip(&report.torsos) {
        println!("  {:?}: planar={} treewidth={:?}", bag.to_vec(), t.planar, t.treewidth);
    }
    Ok(())
}
