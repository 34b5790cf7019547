//! Simple undirected graphs with canonical vertex indexing, plus the torso
//! operation, connectivity tests and minor-model search.

use crate::error::{Error, Result};
use crate::vset::VSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at vertex {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::Invalid(format!("parallel edge ({u},{v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(Graph { n, adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Bitset adjacency rows, for hot loops.
    pub fn adj_bits(&self) -> Vec<VSet> {
        (0..self.n)
            .map(|v| VSet::from_iter(self.n, self.adj[v].iter().copied()))
            .collect()
    }

    pub fn vertex_set(&self) -> VSet {
        VSet::full(self.n)
    }

    /// Neighborhood of a vertex set (excluding the set itself).
    pub fn neighborhood(&self, xs: &VSet) -> VSet {
        let mut out = VSet::empty(self.n);
        for v in xs.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out.subtract(xs);
        out
    }

    /// Connected components of the subgraph induced on `within`.
    pub fn components_within(&self, within: &VSet) -> Vec<VSet> {
        let mut seen = VSet::empty(self.n);
        let mut out = Vec::new();
        for s in within.iter() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VSet::empty(self.n);
            let mut stack = vec![s];
            comp.insert(s);
            seen.insert(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if within.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VSet> {
        self.components_within(&self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Induced subgraph on `xs`, reindexed; returns the graph and the map
    /// new-index -> old-index.
    pub fn induced(&self, xs: &VSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = xs.to_vec();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                if xs.contains(w) && v < w {
                    edges.push((i, inv[w]));
                }
            }
        }
        let mut g = Graph::new(map.len(), &edges).expect("induced subgraph is simple");
        if let Some(labels) = &self.labels {
            g = g.with_labels(map.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, map)
    }
}

/// Torso of G at X: G[X] plus an edge between every pair of X-vertices lying
/// in the neighborhood of a common component of G−X. Reindexed to 0..|X|;
/// the returned map sends new indices to original vertices.
pub fn torso(g: &Graph, x: &VSet) -> Result<(Graph, Vec<usize>)> {
    if x.is_empty() {
        return Err(Error::Invalid("torso of empty vertex set".into()));
    }
    let map: Vec<usize> = x.to_vec();
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    let mut adj: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); map.len()];
    for (i, &v) in map.iter().enumerate() {
        for &w in g.neighbors(v) {
            if x.contains(w) {
                adj[i].insert(inv[w]);
            }
        }
    }
    let rest = x.complement();
    for comp in g.components_within(&rest) {
        let nb: Vec<usize> = g.neighborhood(&comp).iter().map(|v| inv[v]).collect();
        for (a, &u) in nb.iter().enumerate() {
            for &w in &nb[a + 1..] {
                adj[u].insert(w);
                adj[w].insert(u);
            }
        }
    }
    let mut edges = Vec::new();
    for (u, l) in adj.iter().enumerate() {
        for &v in l {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let mut t = Graph::new(map.len(), &edges)?;
    if let Some(labels) = &g.labels {
        t = t.with_labels(map.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok((t, map))
}

/// True iff |V| >= k+1 and no separator of fewer than k vertices exists.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() < k + 1 {
        return false;
    }
    if k == 1 {
        return g.is_connected();
    }
    // Desk scale: exhaust all separators of size < k.
    let verts: Vec<usize> = (0..g.n()).collect();
    let mut sep = Vec::new();
    subsets_up_to(&verts, k - 1, &mut sep, 0, &mut |s| {
        let mut rest = g.vertex_set();
        for &v in s {
            rest.remove(v);
        }
        g.components_within(&rest).len() > 1
    })
    .is_none()
}

fn subsets_up_to(
    verts: &[usize],
    max: usize,
    cur: &mut Vec<usize>,
    from: usize,
    bad: &mut impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if bad(cur) {
        return Some(cur.clone());
    }
    if cur.len() == max {
        return None;
    }
    for i in from..verts.len() {
        cur.push(verts[i]);
        if let Some(w) = subsets_up_to(verts, max, cur, i + 1, bad) {
            cur.pop();
            return Some(w);
        }
        cur.pop();
    }
    None
}

/// 3-connected, and every 3-separator leaves exactly two components, one of
/// them a single vertex.
pub fn is_quasi_4_connected(g: &Graph) -> bool {
    if !is_k_connected(g, 3) {
        return false;
    }
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut rest = g.vertex_set();
                rest.remove(a);
                rest.remove(b);
                rest.remove(c);
                let comps = g.components_within(&rest);
                if comps.len() >= 2 && !(comps.len() == 2 && comps.iter().any(|c| c.len() == 1)) {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Input formats
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Graph6,
    EdgeList,
}

pub fn load_graph(format: Format, bytes: &[u8]) -> Result<Graph> {
    match format {
        Format::Graph6 => graph6_decode(bytes),
        Format::EdgeList => parse_edge_list(bytes),
    }
}

/// Whitespace-separated pairs; vertices renumbered by first appearance.
/// Tokens may be arbitrary identifiers, kept as labels.
pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::Parse { offset: e.valid_up_to(), msg: "invalid utf-8".into() })?;
    let mut ids: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut edges = Vec::new();
    let mut tokens = Vec::new();
    let mut offset = 0;
    for tok in text.split_whitespace() {
        let pos = text[offset..].find(tok).map(|p| p + offset).unwrap_or(offset);
        offset = pos + tok.len();
        tokens.push((tok, pos));
    }
    if tokens.len() % 2 != 0 {
        let (_, pos) = *tokens.last().unwrap();
        return Err(Error::Parse { offset: pos, msg: "dangling endpoint token".into() });
    }
    for pair in tokens.chunks(2) {
        let mut vid = [0usize; 2];
        for (slot, &(tok, _)) in vid.iter_mut().zip(pair) {
            *slot = *index.entry(tok.to_string()).or_insert_with(|| {
                ids.push(tok.to_string());
                ids.len() - 1
            });
        }
        let (u, v) = (vid[0], vid[1]);
        if u == v {
            return Err(Error::Parse { offset: pair[0].1, msg: format!("loop at '{}'", pair[0].0) });
        }
        if !edges.contains(&(u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
        } else {
            return Err(Error::Parse {
                offset: pair[0].1,
                msg: format!("parallel edge '{} {}'", pair[0].0, pair[1].0),
            });
        }
    }
    Ok(Graph::new(ids.len(), &edges)?.with_labels(ids))
}

pub fn graph6_decode(bytes: &[u8]) -> Result<Graph> {
    let bytes: Vec<u8> = bytes
        .iter()
        .copied()
        .filter(|&b| !b.is_ascii_whitespace())
        .collect();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(&bytes);
    if bytes.is_empty() {
        return Err(Error::Parse { offset: 0, msg: "empty graph6 input".into() });
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 4 && bytes[1] != 126 {
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(Error::Parse { offset: 1 + i, msg: "bad graph6 byte".into() });
                }
                n = n << 6 | (b - 63) as usize;
            }
            (n, 4)
        } else {
            return Err(Error::Parse { offset: 0, msg: "graph6 size beyond support".into() });
        }
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err(Error::Parse { offset: 0, msg: "bad graph6 byte".into() });
        }
        ((bytes[0] - 63) as usize, 1)
    };
    let bits_needed = n * (n.saturating_sub(1)) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos != bytes_needed {
        return Err(Error::Parse {
            offset: bytes.len().min(pos),
            msg: format!("expected {} data bytes, found {}", bytes_needed, bytes.len() - pos),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut cur = 0u8;
    let mut have = 0usize;
    for v in 1..n {
        for u in 0..v {
            if have == 0 {
                let b = bytes[pos];
                if !(63..=126).contains(&b) {
                    return Err(Error::Parse { offset: pos, msg: "bad graph6 byte".into() });
                }
                cur = b - 63;
                have = 6;
                pos += 1;
            }
            if cur >> (have - 1) & 1 == 1 {
                edges.push((u, v));
            }
            have -= 1;
            bit += 1;
        }
    }
    let _ = bit;
    Graph::new(n, &edges)
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 export supported up to n = 62");
    let mut out = vec![63 + n as u8];
    let mut cur = 0u8;
    let mut have = 0;
    for v in 1..n {
        for u in 0..v {
            cur = cur << 1 | g.has_edge(u, v) as u8;
            have += 1;
            if have == 6 {
                out.push(63 + cur);
                cur = 0;
                have = 0;
            }
        }
    }
    if have > 0 {
        out.push(63 + (cur << (6 - have)));
    }
    String::from_utf8(out).unwrap()
}

// ---------------------------------------------------------------------------
// Minor models
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct MinorModel {
    pub branch_sets: Vec<VSet>, // indexed by pattern vertex
}

impl MinorModel {
    /// Re-validate all model invariants against host and pattern.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> Result<()> {
        if self.branch_sets.len() != pattern.n() {
            return Err(Error::Violation("branch set count mismatch".into()));
        }
        for (i, b) in self.branch_sets.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::Violation(format!("empty branch set {i}")));
            }
            if host.components_within(b).len() != 1 {
                return Err(Error::Violation(format!("branch set {i} not connected")));
            }
            for (j, c) in self.branch_sets.iter().enumerate() {
                if i < j && b.intersects(c) {
                    return Err(Error::Violation(format!("branch sets {i},{j} overlap")));
                }
            }
        }
        for (u, v) in pattern.edges() {
            let bu = &self.branch_sets[u];
            let found = bu
                .iter()
                .any(|x| host.neighbors(x).iter().any(|&y| self.branch_sets[v].contains(y)));
            if !found {
                return Err(Error::Violation(format!("pattern edge ({u},{v}) unrealized")));
            }
        }
        Ok(())
    }

    pub fn is_faithful(&self) -> bool {
        self.branch_sets.iter().enumerate().all(|(v, b)| b.contains(v))
    }
}

pub const MINOR_PATTERN_CAP: usize = 8;

/// Backtracking branch-set search; deterministic first-found. `root_map`
/// forces given pattern vertices into their branch sets. `faithful` requires
/// pattern vertex v (as a host index) to lie in branch set v.
pub fn find_minor_model(
    host: &Graph,
    pattern: &Graph,
    faithful: bool,
    root_map: Option<&[(usize, usize)]>,
) -> Result<Option<MinorModel>> {
    if pattern.n() > MINOR_PATTERN_CAP {
        return Err(Error::Budget(format!(
            "pattern has {} vertices, cap is {MINOR_PATTERN_CAP}",
            pattern.n()
        )));
    }
    if pattern.n() > host.n() {
        return Ok(None);
    }
    let mut forced: Vec<Option<usize>> = vec![None; pattern.n()];
    if faithful {
        for v in 0..pattern.n() {
            if v >= host.n() {
                return Ok(None);
            }
            forced[v] = Some(v);
        }
    }
    if let Some(rm) = root_map {
        for &(p, h) in rm {
            forced[p] = Some(h);
        }
    }
    // Pattern vertices in decreasing degree order, forced ones first.
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by_key(|&v| (forced[v].is_none(), std::cmp::Reverse(pattern.degree(v)), v));

    let host_bits = host.adj_bits();
    // Iterative deepening on the branch set size: small caps find models
    // quickly in large sparse hosts, and only the final unbounded pass can
    // conclude that no model exists.
    let mut caps: Vec<usize> = [2usize, 3, 4, 6, 9, 14, 21, 32]
        .into_iter()
        .filter(|&c| c < host.n())
        .collect();
    caps.push(host.n());
    let last = caps.len() - 1;
    for (i, cap) in caps.into_iter().enumerate() {
        let mut st = MinorSearch {
            host,
            pattern,
            host_bits: host_bits.clone(),
            branch: vec![VSet::empty(host.n()); pattern.n()],
            used: VSet::empty(host.n()),
            order: order.clone(),
            forced: forced.clone(),
            nodes: 0,
            budget: if i == last { MINOR_NODE_BUDGET } else { MINOR_NODE_BUDGET / 10 },
            max_branch: cap,
        };
        match st.place(0) {
            Ok(true) => return Ok(Some(MinorModel { branch_sets: st.branch })),
            Ok(false) if i == last => return Ok(None),
            Ok(false) => {}
            Err(e) if i == last => return Err(e),
            Err(_) => {}
        }
    }
    unreachable!("the final deepening pass always returns");
}

/// Search states explored before a minor search gives up.
pub const MINOR_NODE_BUDGET: u64 = 2_000_000;

struct MinorSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    host_bits: Vec<VSet>,
    branch: Vec<VSet>,
    used: VSet,
    order: Vec<usize>,
    forced: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
    max_branch: usize,
}

impl<'a> MinorSearch<'a> {
    /// Number of host vertices adjacent to `b` and not yet claimed by any
    /// branch set.
    fn free_frontier(&self, b: &VSet) -> usize {
        let mut frontier = VSet::empty(self.host.n());
        for v in b.iter() {
            frontier.union_with(&self.host_bits[v]);
        }
        frontier.difference(&self.used).len()
    }

    fn place(&mut self, idx: usize) -> Result<bool> {
        if idx == self.order.len() {
            return Ok(true);
        }
        let pv = self.order[idx];
        let roots: Vec<usize> = match self.forced[pv] {
            Some(h) => {
                if self.used.contains(h) {
                    return Ok(false);
                }
                vec![h]
            }
            None => (0..self.host.n()).filter(|&h| !self.used.contains(h)).collect(),
        };
        // Pattern neighbors already placed must be reachable.
        let placed_nbrs: Vec<usize> = self.pattern.neighbors(pv)
            .iter()
            .copied()
            .filter(|&q| self.order[..idx].contains(&q))
            .collect();
        let mut visited = std::collections::HashSet::new();
        for root in roots {
            let mut set = VSet::empty(self.host.n());
            set.insert(root);
            self.used.insert(root);
            if self.grow(pv, &placed_nbrs, set, idx, &mut visited)? {
                return Ok(true);
            }
            // grow() restores `used` on failure for everything except root
            self.used.remove(root);
        }
        Ok(false)
    }

    /// Grow branch set for pv until all placed pattern-neighbors are touched,
    /// then recurse. Growth is by adding one free host vertex adjacent to the
    /// current set; candidates tried in ascending order.
    fn grow(
        &mut self,
        pv: usize,
        need: &[usize],
        set: VSet,
        idx: usize,
        visited: &mut std::collections::HashSet<VSet>,
    ) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "minor search exceeded {} states",
                self.budget
            )));
        }
        if !visited.insert(set.clone()) {
            return Ok(false);
        }
        // Capacity prune: a placed branch set must retain one free frontier
        // vertex per pattern neighbor whose branch set is still to come (the
        // sets are disjoint, so each consumes a distinct frontier vertex).
        // Free space only shrinks along a search path, so a violation by an
        // already-fixed set cannot be repaired by growing this one.
        for k in 0..idx {
            let q = self.order[k];
            let mut unserved = 0;
            for &x in self.pattern.neighbors(q) {
                if self.order[..idx].contains(&x) {
                    continue;
                }
                if x == pv
                    && set.iter().any(|v| self.host_bits[v].intersects(&self.branch[q]))
                {
                    continue;
                }
                unserved += 1;
            }
            if unserved > self.free_frontier(&self.branch[q]) {
                return Ok(false);
            }
        }
        let missing: Vec<usize> = need
            .iter()
            .copied()
            .filter(|&q| !set.iter().any(|x| self.host_bits[x].intersects(&self.branch[q])))
            .collect();
        if missing.is_empty() {
            let unplaced = self
                .pattern
                .neighbors(pv)
                .iter()
                .filter(|&&x| !self.order[..idx].contains(&x))
                .count();
            if self.free_frontier(&set) >= unplaced {
                self.branch[pv] = set.clone();
                if self.place(idx + 1)? {
                    return Ok(true);
                }
                self.branch[pv] = VSet::empty(self.host.n());
            }
        }
        if set.len() >= self.max_branch {
            return Ok(false);
        }
        // Degree prune: a branch set plus free region must be able to reach
        // every still-missing placed neighbor.
        let frontier = self.host.neighborhood(&set);
        for cand in frontier.iter() {
            if self.used.contains(cand) {
                continue;
            }
            // Only extend toward some missing target: candidate must be able
            // to reach one (cheap check: candidate in the free+targets region
            // connected to a missing branch set).
            if !missing.is_empty() {
                let mut region = self.used.complement();
                region.insert(cand);
                for &q in &missing {
                    region.union_with(&self.branch[q]);
                }
                let mut reach = VSet::empty(self.host.n());
                reach.insert(cand);
                let mut stack = vec![cand];
                let mut ok = false;
                'bfs: while let Some(v) = stack.pop() {
                    for &w in self.host.neighbors(v) {
                        if region.contains(w) && !reach.contains(w) {
                            if missing.iter().any(|&q| self.branch[q].contains(w)) {
                                ok = true;
                                break 'bfs;
                            }
                            reach.insert(w);
                            stack.push(w);
                        }
                    }
                }
                if !ok {
                    continue;
                }
            }
            // With nothing missing the set may still need to grow to offer
            // attachment points for pattern neighbors placed later.
            let mut bigger = set.clone();
            bigger.insert(cand);
            self.used.insert(cand);
            if self.grow(pv, need, bigger, idx, visited)? {
                return Ok(true);
            }
            self.used.remove(cand);
        }
        Ok(false)
    }
}

/// Vertex sets of the biconnected components (blocks), via the classical
/// lowpoint edge-stack walk. Isolated vertices yield singleton blocks.
pub fn biconnected_components(g: &Graph) -> Vec<VSet> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<VSet> = Vec::new();

    // Iterative DFS: (vertex, parent, neighbor cursor).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            blocks.push(VSet::from_iter(n, [root]));
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        loop {
            let Some(&(v, parent, cursor)) = stack.last() else { break };
            if cursor < g.degree(v) {
                stack.last_mut().unwrap().2 += 1;
                let w = g.neighbors(v)[cursor];
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        // u is an articulation point (or the root): pop a block.
                        let mut block = VSet::empty(n);
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] || (a, b) == (u, v) {
                                block.insert(a);
                                block.insert(b);
                                edge_stack.pop();
                                if (a, b) == (u, v) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort_by_key(|b| b.to_vec());
    blocks
}

pub fn complete_graph(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::new(n, &e).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..a {
        for v in 0..b {
            e.push((u, a + v));
        }
    }
    Graph::new(a + b, &e).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &e).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &e).unwrap()
}
