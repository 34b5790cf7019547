//! Planarity testing with certificates: an embedding-based test, an
//! independent minor-based oracle, and an explicit K5 / K3,3 witness for
//! nonplanar inputs.
//!
//! ```bash
//! cargo run --example planarity_witness
//! ```

use tangleforge::graph::{complete_bipartite, complete_graph, Graph};
use tangleforge::oracle::planar_minor_oracle;
use tangleforge::planarity::{is_planar, kuratowski_witness};

/// Planar grid on rows x cols vertices.
fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((r * cols + c, r * cols + c + 1));
            }
            if r + 1 < rows {
                edges.push((r * cols + c, (r + 1) * cols + c));
            }
        }
    }
    Graph::new(rows * cols, &edges).unwrap()
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    let edges: Vec<(usize, usize)> =
        edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    Graph::new(10, &edges).unwrap()
}

fn main() -> tangleforge::Result<()> {
    let hosts = [
        ("4x4 grid", grid(4, 4)),
        ("K5", complete_graph(5)),
        ("K3,3", complete_bipartite(3, 3)),
        ("petersen", petersen()),
    ];
    for (name, g) in hosts {
        let planar = is_planar(&g)?;
        let oracle = planar_minor_oracle(&g)?;
        print!("{name}: planar={planar} (oracle agrees: {})", planar == oracle);
        match kuratowski_witness(&g)? {
            None => println!(", no witness"),
            Some(w) => {
                println!(", witness {:?}", w.kind);
                for (i, b) in w.model.branch_sets.iter().enumerate() {
                    println!("  branch set {i}: {:?}", b.to_vec());
                }
            }
        }
    }
    Ok(())
}
