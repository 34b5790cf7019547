//! Decompose a graph along its cut vertices and 2-separators: block-cut
//! tree first, then the Tutte decomposition of each 2-connected piece,
//! cross-checked against the exhaustive triconnected-components oracle.
//!
//! ```bash
//! cargo run --example block_and_tutte_trees
//! ```

use tangleforge::decomposition::{block_cut_tree, tutte_decomposition, validate_td};
use tangleforge::graph::Graph;
use tangleforge::oracle::triconnected_components_oracle;

fn main() -> tangleforge::Result<()> {
    // Two triangles sharing a vertex, one of them glued to a theta graph.
    let g = Graph::new(
        9,
        &[
            (0, 1), (0, 2), (1, 2),            // triangle
            (2, 3), (2, 4), (3, 4),            // second triangle at cut vertex 2
            (4, 5), (5, 6), (6, 7), (7, 4),    // 4-cycle on the far side
            (4, 8), (8, 6),                    // extra path making a theta
        ],
    )?;

    let bc = block_cut_tree(&g)?;
    let report = validate_td(&g, &bc)?;
    println!("block-cut tree: {} bags, width {}", bc.bags.len(), report.width);
    for b in &bc.bags {
        println!("  block {:?}", b.to_vec());
    }

    let tutte = tutte_decomposition(&g)?;
    validate_td(&g, &tutte)?;
    println!("tutte decomposition: {} bags, adhesion {}", tutte.bags.len(), tutte.adhesion());
    let mut bags: Vec<Vec<usize>> = tutte.bags.iter().map(|b| b.to_vec()).collect();
    bags.sort();
    for b in &bags {
        println!("  torso {b:?}");
    }

    // The exhaustive oracle wants a 2-connected input; compare on the
    // theta-with-a-chord graph alone.
    let h = Graph::new(
        5,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (1, 3)],
    )?;
    let td = tutte_decomposition(&h)?;
    let mut bags: Vec<Vec<usize>> = td.bags.iter().map(|b| b.to_vec()).collect();
    bags.sort();
    let oracle = triconnected_components_oracle(&h)?;
    println!("2-connected example: {} torsos, oracle agrees: {}", bags.len(), bags == oracle);
    Ok(())
}
