#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangleforge::graph::{is_k_connected, Graph};
use tangleforge::separation::Separation;
use tangleforge::tangle::Tangle;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize) -> Graph {
    loop {
        let n = rng.gen_range(n_lo..=n_hi);
        let p = rng.gen_range(0.25..0.75);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_k_connected(rng: &mut ChaCha8Rng, k: usize, n_lo: usize, n_hi: usize) -> Graph {
    loop {
        let g = random_connected(rng, n_lo, n_hi);
        if is_k_connected(&g, k) {
            return g;
        }
    }
}

/// Proper members of a tangle as a sorted list of canonical keys, for
/// comparison with the exhaustive orientation oracle.
pub fn tangle_keys(t: &Tangle) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut keys: Vec<_> = t.proper_members().iter().map(|s| s.canonical_key()).collect();
    keys.sort();
    keys
}

pub fn sep_key_set(seps: &[Separation]) -> std::collections::BTreeSet<(Vec<usize>, Vec<usize>)> {
    seps.iter().map(|s| s.canonical_key()).collect()
}

/// Triangle replacement of K4: each vertex becomes a triangle, each original
/// edge a matching edge between the corresponding corner ports. Planar,
/// 3-connected, with a unique order-4 tangle whose crossedges are the six
/// matching edges.
pub fn trunc_k4() -> Graph {
    let nbrs = |v: usize| -> Vec<usize> { (0..4).filter(|&w| w != v).collect() };
    let port = |v: usize, w: usize| -> usize {
        3 * v + nbrs(v).iter().position(|&x| x == w).unwrap()
    };
    let mut edges = Vec::new();
    for v in 0..4 {
        edges.push((3 * v, 3 * v + 1));
        edges.push((3 * v, 3 * v + 2));
        edges.push((3 * v + 1, 3 * v + 2));
        for w in nbrs(v) {
            if v < w {
                edges.push((port(v, w), port(w, v)));
            }
        }
    }
    Graph::new(12, &edges).unwrap()
}

/// Two hub vertices joined by three internally disjoint paths with the given
/// numbers of inner vertices (at most one length may be 0 to stay simple).
pub fn theta_graph(inner: [usize; 3]) -> Graph {
    let n = 2 + inner.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in &inner {
        if len == 0 {
            edges.push((0, 1));
            continue;
        }
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev.min(next), prev.max(next)));
            prev = next;
            next += 1;
        }
        edges.push((1, prev));
    }
    Graph::new(n, &edges).unwrap()
}

/// Two triangles sharing a single vertex.
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// Wheel: hub 0 joined to a rim cycle 1..n.
pub fn wheel(rim: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=rim).map(|i| (0, i)).collect();
    for i in 0..rim {
        edges.push((1 + i, 1 + (i + 1) % rim));
    }
    Graph::new(rim + 1, &edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    for i in 0..5 {
        edges.push((i, i + 5));
        edges.push((i + 5, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// Planar grid graph on rows x cols vertices.
pub fn planar_grid(rows: usize, cols: usize) -> Graph {
    let v = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((v(r, c), v(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((v(r, c), v(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, &edges).unwrap()
}
