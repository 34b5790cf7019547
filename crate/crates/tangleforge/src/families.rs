//! Generated graph families with their natural symmetry actions.

use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, complete_graph, cycle_graph, Graph};
use crate::symmetry::GroupAction;

#[derive(Clone, Debug)]
pub struct Family {
    pub graph: Graph,
    pub action: GroupAction,
}

fn check_dims(p: usize, q: usize) -> Result<()> {
    if p < 3 || q < 3 {
        return Err(Error::Invalid("torus dimensions must be at least 3".into()));
    }
    Ok(())
}

/// Toroidal honeycomb with every vertex expanded into a triangle. Vertices
/// are (honeycomb vertex, incident edge slot); the three slots of a vertex
/// form a triangle and each honeycomb edge joins matching slots of its two
/// endpoints. 3-regular on 6pq vertices. The action is generated by the two
/// torus translations.
pub fn hex_tri_torus(p: usize, q: usize) -> Result<Family> {
    check_dims(p, q)?;
    // Honeycomb: parts A and B, with B(x,y) adjacent to A(x,y), A(x+1,y),
    // A(x,y+1). Slot τ of a vertex is the type of its incident edge.
    let hive = |t: usize, x: usize, y: usize| ((t * p + x % p) * q + y % q) * 3;
    let v = |t: usize, x: usize, y: usize, slot: usize| hive(t, x, y) + slot;
    let n = 6 * p * q;
    let mut edges = Vec::new();
    for t in 0..2 {
        for x in 0..p {
            for y in 0..q {
                for s in 0..3 {
                    edges.push((v(t, x, y, s), v(t, x, y, (s + 1) % 3)));
                }
            }
        }
    }
    let mut edges: Vec<(usize, usize)> =
        edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    for x in 0..p {
        for y in 0..q {
            edges.push((v(1, x, y, 0), v(0, x, y, 0)));
            edges.push((v(1, x, y, 1), v(0, x + 1, y, 1)));
            edges.push((v(1, x, y, 2), v(0, x, y + 1, 2)));
        }
    }
    let graph = Graph::new(n, &edges)?;
    let shift = |dx: usize, dy: usize| -> Vec<usize> {
        let mut perm = vec![0; n];
        for t in 0..2 {
            for x in 0..p {
                for y in 0..q {
                    for s in 0..3 {
                        perm[v(t, x, y, s)] = v(t, x + dx, y + dy, s);
                    }
                }
            }
        }
        perm
    };
    let action = GroupAction::new(&graph, vec![shift(1, 0), shift(0, 1)])?;
    Ok(Family { graph, action })
}

/// The expected contraction target of the hex-tri torus, built directly:
/// vertices are the honeycomb edges, adjacent when the edges share an
/// endpoint (the line graph of the toroidal honeycomb). 4-regular on 3pq
/// vertices.
pub fn kagome_torus(p: usize, q: usize) -> Result<Graph> {
    check_dims(p, q)?;
    let v = |x: usize, y: usize, slot: usize| (x % p * q + y % q) * 3 + slot;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut clique = |vs: [usize; 3]| {
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (vs[i].min(vs[j]), vs[i].max(vs[j]));
                edges.push((a, b));
            }
        }
    };
    for x in 0..p {
        for y in 0..q {
            // The three edges at B(x,y) and the three at A(x,y).
            clique([v(x, y, 0), v(x, y, 1), v(x, y, 2)]);
            clique([v(x, y, 0), v(x + p - 1, y, 1), v(x, y + q - 1, 2)]);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(3 * p * q, &edges)
}

/// Toroidal triangular grid with a 4-vertex gadget in every triangular face:
/// three vertices w1,w2,w3 each adjacent to the whole face triangle, plus an
/// apex z adjacent to w1,w2,w3. 9pq vertices. Action: torus translations.
pub fn tri_gadget_torus(p: usize, q: usize) -> Result<Family> {
    check_dims(p, q)?;
    let grid = |x: usize, y: usize| x % p * q + y % q;
    let pq = p * q;
    // Faces: up-triangle U(x,y) = {(x,y),(x+1,y),(x,y+1)}, down-triangle
    // D(x,y) = {(x+1,y),(x,y+1),(x+1,y+1)}.
    let gadget = |t: usize, x: usize, y: usize, j: usize| pq + ((t * p + x % p) * q + y % q) * 4 + j;
    let n = 9 * pq;
    let mut edges = Vec::new();
    for x in 0..p {
        for y in 0..q {
            edges.push((grid(x, y), grid(x + 1, y)));
            edges.push((grid(x, y), grid(x, y + 1)));
            edges.push((grid(x + 1, y), grid(x, y + 1)));
            for (t, tri) in [
                (0, [grid(x, y), grid(x + 1, y), grid(x, y + 1)]),
                (1, [grid(x + 1, y), grid(x, y + 1), grid(x + 1, y + 1)]),
            ] {
                for j in 0..3 {
                    for &c in &tri {
                        edges.push((gadget(t, x, y, j), c));
                    }
                    edges.push((gadget(t, x, y, j), gadget(t, x, y, 3)));
                }
            }
        }
    }
    let mut edges: Vec<(usize, usize)> =
        edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(n, &edges)?;
    let shift = |dx: usize, dy: usize| -> Vec<usize> {
        let mut perm = vec![0; n];
        for x in 0..p {
            for y in 0..q {
                perm[grid(x, y)] = grid(x + dx, y + dy);
                for t in 0..2 {
                    for j in 0..4 {
                        perm[gadget(t, x, y, j)] = gadget(t, x + dx, y + dy, j);
                    }
                }
            }
        }
        perm
    };
    let action = GroupAction::new(&graph, vec![shift(1, 0), shift(0, 1)])?;
    Ok(Family { graph, action })
}

/// Cycle with its dihedral action (rotation and reflection).
pub fn cycle_family(n: usize) -> Result<Family> {
    if n < 3 {
        return Err(Error::Invalid("cycle length must be at least 3".into()));
    }
    let graph = cycle_graph(n);
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let action = GroupAction::new(&graph, vec![rot, refl])?;
    Ok(Family { graph, action })
}

/// Toroidal square grid; action: translations.
pub fn torus_grid(p: usize, q: usize) -> Result<Family> {
    check_dims(p, q)?;
    let v = |x: usize, y: usize| x % p * q + y % q;
    let mut edges = Vec::new();
    for x in 0..p {
        for y in 0..q {
            edges.push((v(x, y), v(x + 1, y)));
            edges.push((v(x, y), v(x, y + 1)));
        }
    }
    let edges: Vec<(usize, usize)> =
        edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let graph = Graph::new(p * q, &edges)?;
    let shift = |dx: usize, dy: usize| -> Vec<usize> {
        let mut perm = vec![0; p * q];
        for x in 0..p {
            for y in 0..q {
                perm[v(x, y)] = v(x + dx, y + dy);
            }
        }
        perm
    };
    let action = GroupAction::new(&graph, vec![shift(1, 0), shift(0, 1)])?;
    Ok(Family { graph, action })
}

/// Cycles of length k glued at single vertices in a tree pattern: the root
/// cycle carries `branching` child cycles on distinct vertices, recursively
/// to the given depth.
pub fn cycle_tree(k: usize, depth: usize, branching: usize) -> Result<Family> {
    if k < 3 {
        return Err(Error::Invalid("cycle length must be at least 3".into()));
    }
    if branching + 1 > k {
        return Err(Error::Invalid("branching exceeds attachment slots of a cycle".into()));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    // Queue of (attachment vertex or None for the root, remaining depth).
    let mut queue: Vec<(Option<usize>, usize)> = vec![(None, depth)];
    while let Some((attach, d)) = queue.pop() {
        // New cycle: attachment vertex (if any) plus k-1 fresh vertices.
        let mut cyc = Vec::with_capacity(k);
        if let Some(a) = attach {
            cyc.push(a);
        }
        while cyc.len() < k {
            cyc.push(next);
            next += 1;
        }
        for i in 0..k {
            edges.push((cyc[i].min(cyc[(i + 1) % k]), cyc[i].max(cyc[(i + 1) % k])));
        }
        if d > 0 {
            let skip = usize::from(attach.is_some());
            for j in 0..branching {
                queue.push((Some(cyc[skip + j]), d - 1));
            }
        }
    }
    let graph = Graph::new(next, &edges)?;
    let action = GroupAction::trivial(graph.n());
    Ok(Family { graph, action })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn parse(name: &str, params: &[usize]) -> Result<FamilySpec> {
        let expected: &[usize] = match name {
            "hex-tri-torus" | "tri-gadget-torus" | "torus-grid" | "complete-bipartite" => &[2],
            "cycle" | "complete" => &[1],
            "cycle-tree" => &[3],
            _ => return Err(Error::Invalid(format!("unknown family '{name}'"))),
        };
        if !expected.contains(&params.len()) {
            return Err(Error::Invalid(format!(
                "family '{name}' takes {} parameter(s), got {}",
                expected[0],
                params.len()
            )));
        }
        Ok(FamilySpec { name: name.to_string(), params: params.to_vec() })
    }

    pub fn generate(&self) -> Result<Family> {
        let p = |i: usize| self.params[i];
        match self.name.as_str() {
            "hex-tri-torus" => hex_tri_torus(p(0), p(1)),
            "tri-gadget-torus" => tri_gadget_torus(p(0), p(1)),
            "torus-grid" => torus_grid(p(0), p(1)),
            "cycle" => cycle_family(p(0)),
            "cycle-tree" => cycle_tree(p(0), p(1), p(2)),
            "complete" => {
                let graph = complete_graph(p(0));
                let action = GroupAction::trivial(graph.n());
                Ok(Family { graph, action })
            }
            "complete-bipartite" => {
                let graph = complete_bipartite(p(0), p(1));
                let action = GroupAction::trivial(graph.n());
                Ok(Family { graph, action })
            }
            _ => Err(Error::Invalid(format!("unknown family '{}'", self.name))),
        }
    }
}
