//! Enumerate the order-4 tangles of the triangle torus and print every
//! derived set: minimal separations, the non-degenerate subset, crossedges,
//! the core and the region.
//!
//! ```bash
//! cargo run --example tangle_census
//! ```

use tangleforge::families::hex_tri_torus;
use tangleforge::tangle::{
    core_x, crossedges, enumerate_tangles, fence, minimal_separations,
    nondegenerate_minimal, region_r, validate_tangle,
};

fn main() -> tangleforge::Result<()> {
    let fam = hex_tri_torus(3, 3)?;
    let g = &fam.graph;
    println!("triangle torus 3x3: n={} m={}", g.n(), g.m());

    let tangles = enumerate_tangles(g, 4)?;
    println!("order-4 tangles: {}", tangles.len());

    for (i, t) in tangles.iter().enumerate() {
        validate_tangle(g, t)?;
        let min = minimal_separations(t);
        let nd = nondegenerate_minimal(g, t)?;
        println!("tangle {i}: {} members, {} minimal ({} non-degenerate)",
            t.proper_members().len(), min.len(), nd.len());
        for sep in nd.iter().take(3) {
            println!("  minimal: Y={:?} S={:?}", sep.y.to_vec(), sep.s.to_vec());
        }
        if nd.len() > 3 {
            println!("  ... and {} more", nd.len() - 3);
        }

        let ce = crossedges(g, t)?;
        println!("  crossedges ({}): {:?} ...", ce.len(), &ce[..ce.len().min(6)]);
        println!("  core: {:?}", core_x(g, t)?.to_vec());
        let region = region_r(g, t)?;
        println!("  region covers {}/{} vertices", region.len(), g.n());

        // The fence of a minimal separation swaps crossedge endpoints for
        // their partners; on this torus it is always a triangle.
        let f = fence(g, t, &nd[0])?;
        println!("  fence of the first minimal separation: {:?}", f.to_vec());
    }
    Ok(())
}
