//! Independent cross-check implementations. Everything here recomputes a
//! result by a different route than the production code and is only meant for
//! desk-scale instances.

use crate::decomposition::Walk;
use crate::error::{Error, Result};
use crate::graph::{
    biconnected_components, complete_bipartite, complete_graph, find_minor_model, Graph,
};
use crate::separation::Separation;
use crate::vset::VSet;
use std::collections::{BTreeMap, BTreeSet};

// ---------------------------------------------------------------------------
// Planarity by minor search
// ---------------------------------------------------------------------------

/// Delete degree-<=1 vertices and suppress degree-2 vertices until none
/// remain. Presence of a minor with minimum degree 3 (K5, K3,3) is invariant
/// under both reductions.
fn reduce_for_minors(g: &Graph) -> Result<Graph> {
    let mut edges: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    loop {
        let mut deg: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in &edges {
            deg.entry(u).or_default().push(v);
            deg.entry(v).or_default().push(u);
        }
        let Some((&v, nbrs)) = deg.iter().find(|(_, nb)| nb.len() <= 2) else {
            break;
        };
        let nbrs = nbrs.clone();
        edges.retain(|&(a, b)| a != v && b != v);
        if let [a, b] = nbrs[..] {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    // Compact to the surviving vertices.
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (pos[&a], pos[&b])).collect();
    Graph::new(verts.len(), &local)
}

/// One round of maximal-matching contraction (greedy in ascending edge
/// order, rotated by `offset` so different schedules yield different
/// quotients). The result is a minor of the input.
fn contract_matching_round(g: &Graph, offset: usize) -> Result<Graph> {
    let mut partner: Vec<usize> = (0..g.n()).collect();
    let mut matched = vec![false; g.n()];
    let edges = g.edges();
    let m = edges.len();
    for i in 0..m {
        let (u, v) = edges[(i + offset) % m];
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            partner[v] = u;
        }
    }
    let mut group = vec![usize::MAX; g.n()];
    let mut count = 0;
    for v in 0..g.n() {
        if partner[v] == v {
            group[v] = count;
            count += 1;
        }
    }
    for v in 0..g.n() {
        if partner[v] != v {
            group[v] = group[partner[v]];
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (group[u].min(group[v]), group[u].max(group[v])))
        .filter(|&(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::new(count, &edges)
}

fn has_k5_or_k33_minor(h: &Graph) -> Result<bool> {
    let k5 = complete_graph(5);
    let k33 = complete_bipartite(3, 3);
    if h.n() >= 6 && find_minor_model(h, &k33, false, None)?.is_some() {
        return Ok(true);
    }
    Ok(h.n() >= 5 && find_minor_model(h, &k5, false, None)?.is_some())
}

/// Planarity via Kuratowski/Wagner: planar iff no block has a K5 or K3,3
/// minor. Each block is series-reduced before the search. Large blocks first
/// get a sound shortcut: a small minor obtained by repeated matching
/// contraction is searched, and a hit there is a hit in the block; only the
/// verdict "planar" requires the exhaustive search on the block itself.
pub fn planar_minor_oracle(g: &Graph) -> Result<bool> {
    for block in biconnected_components(g) {
        if block.len() < 5 {
            continue;
        }
        let (h, _) = g.induced(&block);
        let h = reduce_for_minors(&h)?;
        if h.n() > 12 {
            // Several contraction schedules; any one finding the minor in
            // its small quotient settles the block as nonplanar.
            for offset in 0..8 {
                let mut c = h.clone();
                while c.n() > 12 {
                    let next = contract_matching_round(&c, offset * 7)?;
                    if next.n() == c.n() {
                        break;
                    }
                    c = next;
                }
                let c = reduce_for_minors(&c)?;
                if has_k5_or_k33_minor(&c)? {
                    return Ok(false);
                }
            }
        }
        if has_k5_or_k33_minor(&h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Separations by brute force
// ---------------------------------------------------------------------------

/// Every proper separation of order <= max_order, found by trying all 3^n
/// assignments of vertices to Y, S, Z. Both orientations, canonically sorted.
pub fn naive_separations(g: &Graph, max_order: usize) -> Result<Vec<Separation>> {
    let n = g.n();
    if n > 13 {
        return Err(Error::Budget("brute-force separations capped at 13 vertices".into()));
    }
    let edges = g.edges();
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    'outer: for code in 0..total {
        let mut y = VSet::empty(n);
        let mut s = VSet::empty(n);
        let mut z = VSet::empty(n);
        let mut c = code;
        for v in 0..n {
            match c % 3 {
                0 => y.insert(v),
                1 => s.insert(v),
                _ => z.insert(v),
            }
            c /= 3;
        }
        if s.len() > max_order || y.is_empty() || z.is_empty() {
            continue;
        }
        for &(u, v) in &edges {
            if (y.contains(u) && z.contains(v)) || (z.contains(u) && y.contains(v)) {
                continue 'outer;
            }
        }
        out.push(Separation::new_unchecked(y, s, z));
    }
    out.sort_by_key(|s| s.canonical_key());
    out.dedup();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Tangles by exhaustive orientation
// ---------------------------------------------------------------------------

fn z_mask(z: &VSet) -> u64 {
    z.iter().fold(0u64, |m, v| m | 1 << v)
}

fn edge_mask(edges: &[(usize, usize)], zm: u64) -> u128 {
    let mut out = 0u128;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if zm >> u & 1 == 1 || zm >> v & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

struct OrientSearch {
    pairs: Vec<(usize, usize)>,
    zs: Vec<u64>,
    es: Vec<u128>,
    base: Vec<(u64, u128)>,
    budget: u64,
    nodes: u64,
    found: Vec<Vec<usize>>,
}

impl OrientSearch {
    /// The defining three-member condition: a common Z vertex or an edge
    /// meeting all three Z sides.
    fn triple_ok(&self, a: (u64, u128), b: (u64, u128), c: (u64, u128)) -> bool {
        a.0 & b.0 & c.0 != 0 || a.1 & b.1 & c.1 != 0
    }

    fn admissible(&self, m: usize, chosen: &[(u64, u128)]) -> bool {
        let zm = (self.zs[m], self.es[m]);
        if !self.triple_ok(zm, zm, zm) {
            return false;
        }
        let all = chosen.iter().chain(self.base.iter());
        for (i, &a) in all.clone().enumerate() {
            if !self.triple_ok(a, zm, zm) {
                return false;
            }
            for &b in all.clone().skip(i + 1) {
                if !self.triple_ok(a, b, zm) {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        &mut self,
        pi: usize,
        members: &mut Vec<usize>,
        chosen: &mut Vec<(u64, u128)>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget("orientation oracle exceeded its node budget".into()));
        }
        if pi == self.pairs.len() {
            self.found.push(members.clone());
            return Ok(());
        }
        for m in [self.pairs[pi].0, self.pairs[pi].1] {
            if self.admissible(m, chosen) {
                members.push(m);
                chosen.push((self.zs[m], self.es[m]));
                self.search(pi + 1, members, chosen)?;
                chosen.pop();
                members.pop();
            }
        }
        Ok(())
    }
}

/// Tangles of order k by trying every orientation of every proper separation
/// pair and keeping the assignments that satisfy the two tangle axioms
/// outright (including against the forced non-proper members). Returns each
/// tangle as the sorted canonical keys of its proper members.
pub fn exhaustive_tangles(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Vec<Vec<(Vec<usize>, Vec<usize>)>>> {
    if !(2..=4).contains(&k) {
        return Err(Error::Invalid("tangle order must be between 2 and 4".into()));
    }
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Invalid("tangle oracle needs a connected nonempty graph".into()));
    }
    if g.n() < k {
        // Some S = V(G) has order < k and both its orientations have an empty
        // Z side, so no orientation of that pair is admissible.
        return Ok(Vec::new());
    }
    let seps = naive_separations(g, k - 1)?;
    let edges = g.edges();
    if edges.len() > 128 {
        return Err(Error::Budget("orientation oracle capped at 128 edges".into()));
    }
    let mut index: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    for (i, s) in seps.iter().enumerate() {
        index.insert(s.canonical_key(), i);
    }
    let mut pairs = Vec::new();
    for (i, s) in seps.iter().enumerate() {
        let j = index[&s.reverse().canonical_key()];
        if i < j {
            pairs.push((i, j));
        }
    }
    let zs: Vec<u64> = seps.iter().map(|s| z_mask(&s.z)).collect();
    let es: Vec<u128> = seps.iter().map(|s| edge_mask(&edges, z_mask(&s.z))).collect();
    // Non-proper members (∅,S,Z), forced into every tangle: all S with
    // |S| < k and Z = V ∖ S nonempty.
    let mut base: Vec<(u64, u128)> = Vec::new();
    let full = (1u64 << g.n()) - 1;
    let mut stack: Vec<(u64, usize, usize)> = vec![(0, 0, 0)];
    while let Some((smask, size, from)) = stack.pop() {
        let zm = full & !smask;
        if zm != 0 {
            base.push((zm, edge_mask(&edges, zm)));
        }
        if size < k - 1 {
            for v in from..g.n() {
                stack.push((smask | 1 << v, size + 1, v + 1));
            }
        }
    }
    let mut searcher = OrientSearch { pairs, zs, es, base, budget, nodes: 0, found: Vec::new() };
    // The forced block must itself satisfy the three-member condition.
    let base = searcher.base.clone();
    let base_ok = (0..base.len()).all(|a| {
        (a..base.len()).all(|b| {
            (b..base.len()).all(|c| searcher.triple_ok(base[a], base[b], base[c]))
        })
    });
    if base_ok {
        searcher.search(0, &mut Vec::new(), &mut Vec::new())?;
    }
    let mut out: Vec<Vec<(Vec<usize>, Vec<usize>)>> = searcher
        .found
        .iter()
        .map(|members| {
            let mut keys: Vec<_> = members.iter().map(|&m| seps[m].canonical_key()).collect();
            keys.sort();
            keys
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Automorphisms by exhaustive assignment
// ---------------------------------------------------------------------------

/// All automorphisms (including the identity) by assigning images vertex by
/// vertex; the only pruning is adjacency consistency with the prefix, which
/// is part of the definition.
pub fn exhaustive_automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n() > 10 {
        return Err(Error::Budget("exhaustive automorphism search capped at 10 vertices".into()));
    }
    let n = g.n();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = g.n();
        if v == n {
            out.push(image.clone());
            return;
        }
        for w in 0..n {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            rec(g, v + 1, image, used, out);
            used[w] = false;
            image[v] = usize::MAX;
        }
    }
    rec(g, 0, &mut image, &mut used, &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Triconnected components by split and merge
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct MEdge {
    u: usize,
    v: usize,
    /// Pairing id when the edge is virtual; None for a real edge.
    virt: Option<usize>,
}

fn comp_vertices(edges: &[MEdge]) -> Vec<usize> {
    let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

fn has_parallel(edges: &[MEdge]) -> bool {
    let mut seen = BTreeSet::new();
    edges.iter().any(|e| !seen.insert((e.u.min(e.v), e.u.max(e.v))))
}

fn is_polygon(edges: &[MEdge], verts: &[usize]) -> bool {
    if verts.len() < 3 || edges.len() != verts.len() || has_parallel(edges) {
        return false;
    }
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for e in edges {
        *deg.entry(e.u).or_insert(0) += 1;
        *deg.entry(e.v).or_insert(0) += 1;
    }
    // Connectivity follows: a 2-regular simple graph with as many edges as
    // vertices and every vertex covered is a single cycle or a disjoint union
    // of cycles; the splitting below only ever produces connected pieces.
    deg.values().all(|&d| d == 2)
}

fn simple_3_connected(edges: &[MEdge], verts: &[usize]) -> bool {
    if has_parallel(edges) || verts.len() < 4 {
        return false;
    }
    let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local: Vec<(usize, usize)> = edges.iter().map(|e| (pos[&e.u], pos[&e.v])).collect();
    let g = Graph::new(verts.len(), &local).expect("component edges are well formed");
    crate::graph::is_k_connected(&g, 3)
}

/// Edge groups at the pair {a,b}: one group per component of the piece minus
/// {a,b} (that component's edges plus its attachments), and one per direct
/// a-b edge.
fn classes_at(edges: &[MEdge], verts: &[usize], a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut ncomp = 0;
    for &root in verts {
        if root == a || root == b || label.contains_key(&root) {
            continue;
        }
        label.insert(root, ncomp);
        let mut frontier = vec![root];
        while let Some(v) = frontier.pop() {
            for e in edges {
                for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                    if x == v && y != a && y != b && !label.contains_key(&y) {
                        label.insert(y, ncomp);
                        frontier.push(y);
                    }
                }
            }
        }
        ncomp += 1;
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for (i, e) in edges.iter().enumerate() {
        let ends = [e.u, e.v];
        if ends.contains(&a) && ends.contains(&b) {
            groups.push(vec![i]);
        } else {
            let inner = if e.u == a || e.u == b { e.v } else { e.u };
            groups[label[&inner]].push(i);
        }
    }
    groups.retain(|g| !g.is_empty());
    groups
}

fn split_fully(piece: Vec<MEdge>, next_pair: &mut usize, out: &mut Vec<Vec<MEdge>>) {
    let verts = comp_vertices(&piece);
    if verts.len() == 2 || is_polygon(&piece, &verts) || simple_3_connected(&piece, &verts) {
        out.push(piece);
        return;
    }
    for (ai, &a) in verts.iter().enumerate() {
        for &b in &verts[ai + 1..] {
            let groups = classes_at(&piece, &verts, a, b);
            if groups.len() < 2 {
                continue;
            }
            // Split off the first component group, provided the rest keeps at
            // least two edges.
            let first = groups
                .iter()
                .find(|g| g.len() >= 2)
                .expect("a 2-connected piece attaches every component to both cut vertices");
            if piece.len() - first.len() < 2 {
                continue;
            }
            let id = *next_pair;
            *next_pair += 1;
            let in_first: BTreeSet<usize> = first.iter().copied().collect();
            let mut side: Vec<MEdge> =
                first.iter().map(|&i| piece[i].clone()).collect();
            side.push(MEdge { u: a, v: b, virt: Some(id) });
            let mut rest: Vec<MEdge> = piece
                .iter()
                .enumerate()
                .filter(|(i, _)| !in_first.contains(i))
                .map(|(_, e)| e.clone())
                .collect();
            rest.push(MEdge { u: a, v: b, virt: Some(id) });
            split_fully(side, next_pair, out);
            split_fully(rest, next_pair, out);
            return;
        }
    }
    // 2-connected, not 3-connected, not a polygon or bond: a splittable pair
    // must exist.
    unreachable!("no split pair found in a splittable piece");
}

fn is_bond(edges: &[MEdge]) -> bool {
    comp_vertices(edges).len() == 2
}

/// Triconnected components of a 2-connected graph, as sorted vertex sets
/// (a multiset). Classical split into bonds, polygons and 3-connected pieces,
/// merged back so that no two polygons and no two bonds share a virtual edge.
/// Bonds carrying exactly one real and two virtual edges are then dropped:
/// they encode a real edge joining exactly two pieces, which glue directly.
pub fn triconnected_components_oracle(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if !crate::graph::is_k_connected(g, 2) {
        return Err(Error::Invalid("triconnected oracle needs a 2-connected graph".into()));
    }
    let initial: Vec<MEdge> =
        g.edges().iter().map(|&(u, v)| MEdge { u, v, virt: None }).collect();
    let mut pieces: Vec<Vec<MEdge>> = Vec::new();
    let mut next_pair = 0;
    split_fully(initial, &mut next_pair, &mut pieces);
    // Merge polygons sharing a virtual pair, then bonds sharing one.
    loop {
        let mut by_pair: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (pi, piece) in pieces.iter().enumerate() {
            for e in piece {
                if let Some(id) = e.virt {
                    by_pair.entry(id).or_default().push(pi);
                }
            }
        }
        let mut merged = None;
        for (&id, locs) in &by_pair {
            if locs.len() != 2 || locs[0] == locs[1] {
                continue;
            }
            let (i, j) = (locs[0], locs[1]);
            let vi = comp_vertices(&pieces[i]);
            let vj = comp_vertices(&pieces[j]);
            let both_polygons = is_polygon(&pieces[i], &vi) && is_polygon(&pieces[j], &vj);
            let both_bonds = is_bond(&pieces[i]) && is_bond(&pieces[j]);
            if both_polygons || both_bonds {
                merged = Some((id, i, j));
                break;
            }
        }
        let Some((id, i, j)) = merged else { break };
        let mut joined: Vec<MEdge> = Vec::new();
        for &pi in &[i, j] {
            for e in &pieces[pi] {
                if e.virt != Some(id) {
                    joined.push(e.clone());
                }
            }
        }
        let hi = i.max(j);
        let lo = i.min(j);
        pieces.remove(hi);
        pieces.remove(lo);
        pieces.push(joined);
    }
    let mut out = Vec::new();
    for piece in &pieces {
        if is_bond(piece) {
            let real = piece.iter().filter(|e| e.virt.is_none()).count();
            if piece.len() == 3 && real == 1 {
                continue;
            }
        }
        out.push(comp_vertices(piece));
    }
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Closed-walk closure
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkClosure {
    Generates,
    /// Not confirmed within the length bound; never reported as a failure
    /// because the combination length needed has no a-priori bound.
    Inconclusive,
}

/// Cyclic spur reduction of a closed walk given as its cyclic vertex list.
fn reduce_cyclic(mut c: Vec<usize>) -> Vec<usize> {
    loop {
        let l = c.len();
        if l < 2 {
            return c;
        }
        let mut removed = false;
        for i in 0..l {
            if c[i] == c[(i + 2) % l] {
                let (tip, dup) = ((i + 1) % l, (i + 2) % l);
                let mut keep: Vec<usize> = Vec::with_capacity(l - 2);
                for (j, &v) in c.iter().enumerate() {
                    if j != tip && j != dup {
                        keep.push(v);
                    }
                }
                c = keep;
                removed = true;
                break;
            }
        }
        if !removed {
            return c;
        }
    }
}

fn canon_cyclic(c: &[usize]) -> Vec<usize> {
    let l = c.len();
    let mut best: Option<Vec<usize>> = None;
    for rot in 0..l {
        for reflect in [false, true] {
            let cand: Vec<usize> = (0..l)
                .map(|i| {
                    let idx = if reflect { (rot + l - i) % l } else { (rot + i) % l };
                    c[idx]
                })
                .collect();
            if best.as_ref().map_or(true, |b| &cand < b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

fn check_closed_walk(g: &Graph, w: &Walk) -> Result<()> {
    let vs = &w.vertices;
    if vs.len() < 2 || vs.first() != vs.last() {
        return Err(Error::Invalid("walk is not closed".into()));
    }
    for pair in vs.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(Error::Invalid(format!("walk uses non-edge ({},{})", pair[0], pair[1])));
        }
    }
    Ok(())
}

/// Fundamental cycles of a spanning forest, as cyclic vertex lists.
fn fundamental_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut tree: BTreeSet<(usize, usize)> = BTreeSet::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    tree.insert((v.min(w), v.max(w)));
                    stack.push(w);
                }
            }
        }
    }
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if tree.contains(&(u.min(v), u.max(v))) {
            continue;
        }
        let (mut a, mut b) = (u, v);
        let mut left = vec![a];
        let mut right = vec![b];
        while depth[a] > depth[b] {
            a = parent[a];
            left.push(a);
        }
        while depth[b] > depth[a] {
            b = parent[b];
            right.push(b);
        }
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        out.push(left);
    }
    out
}

const CLOSURE_SET_CAP: usize = 50_000;

/// Do the given walks generate every closed walk of g under sums at shared
/// vertices, rotations, reflections and spur insertion/deletion? Decided by
/// closing the spur-reduced generator set under sums, bounded at combined
/// walk length 2|E|, and testing that every fundamental cycle appears: walks
/// equal up to the other operations share a reduced canonical form, and a set
/// reaching all fundamental cycles reaches every closed walk.
pub fn walk_closure_check(g: &Graph, walks: &[Walk]) -> Result<WalkClosure> {
    for w in walks {
        check_closed_walk(g, w)?;
    }
    let cap = 2 * g.m();
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    for w in walks {
        let r = reduce_cyclic(w.vertices[..w.vertices.len() - 1].to_vec());
        if !r.is_empty() && r.len() <= cap && set.insert(canon_cyclic(&r)) {
            queue.push(canon_cyclic(&r));
        }
    }
    let targets: BTreeSet<Vec<usize>> = fundamental_cycles(g)
        .into_iter()
        .map(|c| canon_cyclic(&reduce_cyclic(c)))
        .collect();
    let done = |set: &BTreeSet<Vec<usize>>| targets.iter().all(|t| set.contains(t));
    if done(&set) {
        return Ok(WalkClosure::Generates);
    }
    while let Some(a) = queue.pop() {
        let partners: Vec<Vec<usize>> = set.iter().cloned().collect();
        for b in partners {
            for flip in [false, true] {
                let b_use: Vec<usize> =
                    if flip { b.iter().rev().copied().collect() } else { b.clone() };
                for i in 0..a.len() {
                    for j in 0..b_use.len() {
                        if a[i] != b_use[j] {
                            continue;
                        }
                        // Sum at the shared vertex: rotate both to start
                        // there and concatenate.
                        let mut sum: Vec<usize> = Vec::with_capacity(a.len() + b_use.len());
                        sum.extend(a.iter().cycle().skip(i).take(a.len()));
                        sum.extend(b_use.iter().cycle().skip(j).take(b_use.len()));
                        let r = reduce_cyclic(sum);
                        if r.is_empty() || r.len() > cap {
                            continue;
                        }
                        let key = canon_cyclic(&r);
                        if set.insert(key.clone()) {
                            if done(&set) {
                                return Ok(WalkClosure::Generates);
                            }
                            queue.push(key);
                        }
                    }
                }
            }
        }
        if set.len() > CLOSURE_SET_CAP {
            return Ok(WalkClosure::Inconclusive);
        }
    }
    Ok(if done(&set) { WalkClosure::Generates } else { WalkClosure::Inconclusive })
}
