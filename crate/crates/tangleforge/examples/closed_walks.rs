//! Generators for the closed walks of a graph, read off a tree-
//! decomposition, with an oracle confirming that they combine into every
//! closed walk up to twice the edge count.
//!
//! ```bash
//! cargo run --example closed_walks
//! ```

use tangleforge::decomposition::{
    block_cut_tree, closed_walk_generators, TreeDecomposition,
};
use tangleforge::graph::{cycle_graph, Graph};
use tangleforge::oracle::{walk_closure_check, WalkClosure};

fn main() -> tangleforge::Result<()> {
    // A single cycle needs one generator: the cycle itself.
    let g = cycle_graph(6);
    let walks = closed_walk_generators(&g, &TreeDecomposition::trivial(&g))?;
    println!("C6: {} generator(s): {:?}", walks.len(), walks[0].vertices);
    println!("  closure: {:?}", walk_closure_check(&g, &walks)?);

    // The theta graph has two independent cycles.
    let theta = Graph::new(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])?;
    let walks = closed_walk_generators(&theta, &TreeDecomposition::trivial(&theta))?;
    println!("theta: {} generators", walks.len());
    for w in &walks {
        println!("  {:?}", w.vertices);
    }
    println!("  closure: {:?}", walk_closure_check(&theta, &walks)?);

    // Dropping a generator leaves walks that cannot be produced.
    let partial = &walks[..walks.len() - 1];
    assert_ne!(walk_closure_check(&theta, partial)?, WalkClosure::Generates);
    println!("  dropping one generator: no longer confirmed");

    // Across a cut vertex the generators come per block.
    let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])?;
    let td = block_cut_tree(&bowtie)?;
    let walks = closed_walk_generators(&bowtie, &td)?;
    println!("bowtie via its block-cut tree: {} generators", walks.len());
    for w in &walks {
        println!("  {:?}", w.vertices);
    }
    println!("  closure: {:?}", walk_closure_check(&bowtie, &walks)?);
    Ok(())
}
