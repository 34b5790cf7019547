//! Generated graph families carry their natural symmetry action alongside
//! the graph. This example prints orbits for a few families and checks a
//! separation family for invariance under the action.
//!
//! ```bash
//! cargo run --example families_and_symmetry
//! ```

use tangleforge::families::{cycle_family, hex_tri_torus, torus_grid};
use tangleforge::symmetry::{
    automorphisms, invariant_family, separation_orbits, vertex_orbits,
};
use tangleforge::tangle::{enumerate_tangles, nondegenerate_minimal};

fn main() -> tangleforge::Result<()> {
    let fam = cycle_family(7)?;
    println!("C7 dihedral action: order {}", fam.action.order()?);
    println!("  vertex orbits: {:?}", vertex_orbits(&fam.action));

    let fam = torus_grid(3, 4)?;
    println!("3x4 torus grid translations: order {}", fam.action.order()?);
    println!("  vertex orbits: {}", vertex_orbits(&fam.action).len());

    let fam = hex_tri_torus(3, 3)?;
    let g = &fam.graph;
    let orbits = vertex_orbits(&fam.action);
    println!("triangle torus translations: {} orbits of size {}",
        orbits.len(), orbits[0].len());
    // The full automorphism group of a small cycle is its dihedral group.
    let full = automorphisms(&tangleforge::graph::cycle_graph(7))?;
    println!("C7 automorphism generators found: {}", full.generators.len());

    // The minimal separations of the unique tangle form an invariant
    // family; translations split them into two triangle sublattices.
    let t = enumerate_tangles(g, 4)?.remove(0);
    let nd = nondegenerate_minimal(g, &t)?;
    println!("  minimal separations invariant: {}", invariant_family(&fam.action, &nd));
    let so = separation_orbits(&fam.action, &nd);
    println!("  separation orbits: {} of sizes {:?}",
        so.len(), so.iter().map(|o| o.len()).collect::<Vec<_>>());
    Ok(())
}
