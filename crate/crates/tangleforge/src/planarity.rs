//! Planarity: an incremental face-embedding decision procedure, Kuratowski
//! witnesses as validated minor models, and the planarity-preservation
//! harness for crossedge contraction.

use crate::error::{Error, Result};
use crate::graph::{
    biconnected_components, complete_bipartite, complete_graph, torso, Graph, MinorModel,
};
use crate::separation::{classify_pair, PairClass, Separation};
use crate::tangle::{crossedges, fence, nondegenerate_minimal, region_r, Tangle};
use crate::vset::VSet;
use std::collections::BTreeSet;

/// Planarity by block: a graph is planar iff each biconnected component is.
pub fn is_planar(g: &Graph) -> Result<bool> {
    for block in biconnected_components(g) {
        if block.len() >= 5 {
            let (h, _) = g.induced(&block);
            if !planar_2connected(&h)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Incremental embedding of a 2-connected graph: keep the face boundaries of
/// a partial embedding; repeatedly pick a bridge (preferring one with a
/// unique admissible face) and embed a path of it through an admissible
/// face, splitting the face. Nonplanar exactly when some bridge has no
/// admissible face.
fn planar_2connected(g: &Graph) -> Result<bool> {
    let n = g.n();
    let m = g.m();
    if m <= 8 {
        // Fewer edges than any nonplanar graph has.
        return Ok(true);
    }
    if m > 3 * n - 6 {
        return Ok(false);
    }
    // Initial cycle by walking a DFS back edge.
    let cycle = some_cycle(g).ok_or_else(|| Error::Invalid("2-connected block without a cycle".into()))?;
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut emb = VSet::from_iter(n, cycle.iter().copied());
    let mut emb_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    for w in cycle.windows(2) {
        emb_edges.insert(norm(w[0], w[1]));
    }
    emb_edges.insert(norm(cycle[0], *cycle.last().unwrap()));

    loop {
        // Bridges: unembedded chords between embedded vertices, and the
        // components of G minus the embedded vertices with their attachments.
        struct Bridge {
            attachments: Vec<usize>,
            comp: Option<VSet>,
            chord: Option<(usize, usize)>,
        }
        let mut bridges = Vec::new();
        for (u, v) in g.edges() {
            if emb.contains(u) && emb.contains(v) && !emb_edges.contains(&norm(u, v)) {
                bridges.push(Bridge { attachments: vec![u, v], comp: None, chord: Some((u, v)) });
            }
        }
        for comp in g.components_within(&emb.complement()) {
            let att = g.neighborhood(&comp).intersection(&emb);
            bridges.push(Bridge { attachments: att.to_vec(), comp: Some(comp), chord: None });
        }
        if bridges.is_empty() {
            return Ok(true);
        }
        let admissible: Vec<Vec<usize>> = bridges
            .iter()
            .map(|b| {
                (0..faces.len())
                    .filter(|&f| {
                        let fs = VSet::from_iter(n, faces[f].iter().copied());
                        b.attachments.iter().all(|&a| fs.contains(a))
                    })
                    .collect()
            })
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return Ok(false);
        }
        let pick = admissible
            .iter()
            .position(|a| a.len() == 1)
            .unwrap_or(0);
        let face_idx = admissible[pick][0];
        let bridge = &bridges[pick];
        // A path through the bridge between two attachment vertices.
        let path: Vec<usize> = match bridge.chord {
            Some((u, v)) => vec![u, v],
            None => {
                let comp = bridge.comp.as_ref().unwrap();
                let (a, b) = (bridge.attachments[0], bridge.attachments[1]);
                bridge_path(g, comp, a, b)?
            }
        };
        // Split the face along the path.
        let face = faces.swap_remove(face_idx);
        let i = face.iter().position(|&x| x == path[0]).unwrap();
        let j = face.iter().position(|&x| x == *path.last().unwrap()).unwrap();
        let len = face.len();
        let mut seg1 = Vec::new(); // path[0] .. path[last] along the face
        let mut at = i;
        loop {
            seg1.push(face[at]);
            if at == j {
                break;
            }
            at = (at + 1) % len;
        }
        let mut seg2 = Vec::new(); // path[last] .. path[0] along the face
        let mut at = j;
        loop {
            seg2.push(face[at]);
            if at == i {
                break;
            }
            at = (at + 1) % len;
        }
        let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut face1 = seg1;
        face1.extend(interior.iter().rev());
        let mut face2 = seg2;
        face2.extend(interior.iter());
        faces.push(face1);
        faces.push(face2);
        for &v in &interior {
            emb.insert(v);
        }
        for w in path.windows(2) {
            emb_edges.insert(norm(w[0], w[1]));
        }
    }
}

fn some_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unseen, 1 on stack path, 2 done
    let mut stack = vec![(0usize, 0usize)];
    state[0] = 1;
    while let Some(&(v, cursor)) = stack.last() {
        if cursor < g.degree(v) {
            stack.last_mut().unwrap().1 += 1;
            let w = g.neighbors(v)[cursor];
            if w == parent[v] {
                continue;
            }
            if state[w] == 1 {
                // Back edge: cycle w .. v.
                let mut cyc = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur];
                    cyc.push(cur);
                }
                cyc.reverse();
                return Some(cyc);
            }
            if state[w] == 0 {
                state[w] = 1;
                parent[w] = v;
                stack.push((w, 0));
            }
        } else {
            state[v] = 2;
            stack.pop();
        }
    }
    None
}

/// Deterministic path a -> b whose interior lies in the component.
fn bridge_path(g: &Graph, comp: &VSet, a: usize, b: usize) -> Result<Vec<usize>> {
    let first = g
        .neighbors(a)
        .iter()
        .copied()
        .find(|&w| comp.contains(w))
        .ok_or_else(|| Error::Invalid("attachment does not touch its bridge".into()))?;
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    seen[first] = true;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(first);
    while let Some(v) = queue.pop_front() {
        if v == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != first {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return Ok(path);
        }
        for &w in g.neighbors(v) {
            if (comp.contains(w) || w == b) && !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    Err(Error::Invalid("bridge path not found".into()))
}

// ---------------------------------------------------------------------------
// Kuratowski witnesses
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Clone, Debug)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub model: MinorModel,
}

impl KuratowskiWitness {
    pub fn pattern(&self) -> Graph {
        match self.kind {
            KuratowskiKind::K5 => complete_graph(5),
            KuratowskiKind::K33 => complete_bipartite(3, 3),
        }
    }
}

/// A validated K5 or K3,3 minor model of a nonplanar graph: take a
/// deletion-minimal nonplanar subgraph (a subdivision of one of the two
/// patterns), read off the branch vertices and assign each subdivision path
/// to its lower branch endpoint.
pub fn kuratowski_witness(g: &Graph) -> Result<Option<KuratowskiWitness>> {
    if is_planar(g)? {
        return Ok(None);
    }
    // One pass suffices for deletion-minimality: an edge whose removal left
    // the graph planar stays necessary as further edges are removed.
    let mut edges: Vec<(usize, usize)> = g.edges();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        let h = Graph::new(g.n(), &trial)?;
        if !is_planar(&h)? {
            edges = trial;
        } else {
            i += 1;
        }
    }
    let h = Graph::new(g.n(), &edges)?;
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (branch.len(), branch.iter().map(|&v| h.degree(v)).max()) {
        (5, Some(4)) => KuratowskiKind::K5,
        (6, Some(3)) => KuratowskiKind::K33,
        _ => {
            return Err(Error::Violation(format!(
                "deletion-minimal nonplanar subgraph is not a subdivision of either pattern: {} branch vertices",
                branch.len()
            )))
        }
    };
    // Trace the subdivision paths between branch vertices.
    let is_branch = VSet::from_iter(h.n(), branch.iter().copied());
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &b in &branch {
        for &w in h.neighbors(b) {
            if done.contains(&(b.min(w), b.max(w))) {
                continue;
            }
            let mut path = vec![b, w];
            let mut prev = b;
            let mut cur = w;
            while !is_branch.contains(cur) {
                let next = h
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .ok_or_else(|| Error::Violation("dangling subdivision path".into()))?;
                prev = cur;
                cur = next;
                path.push(cur);
            }
            for e in path.windows(2) {
                done.insert((e[0].min(e[1]), e[0].max(e[1])));
            }
            paths.push(path);
        }
    }
    // Branch adjacency graph on the branch vertices.
    let bindex = |v: usize| branch.iter().position(|&b| b == v).unwrap();
    let mut branch_edges: Vec<(usize, usize)> = paths
        .iter()
        .map(|p| {
            let (a, b) = (bindex(p[0]), bindex(*p.last().unwrap()));
            (a.min(b), a.max(b))
        })
        .collect();
    branch_edges.sort_unstable();
    branch_edges.dedup();
    if branch_edges.len() != paths.len() {
        return Err(Error::Violation("parallel subdivision paths in minimal subgraph".into()));
    }
    let core = Graph::new(branch.len(), &branch_edges)?;
    let pattern = match kind {
        KuratowskiKind::K5 => complete_graph(5),
        KuratowskiKind::K33 => complete_bipartite(3, 3),
    };
    let iso = crate::symmetry::find_isomorphism(&pattern, &core)?
        .ok_or_else(|| Error::Violation("branch core does not match the classified pattern".into()))?;
    // Branch sets: the branch vertex plus the interiors of the paths assigned
    // to it (each path goes to its lower-indexed endpoint).
    let mut sets = vec![VSet::empty(g.n()); pattern.n()];
    for (p, &c) in iso.iter().enumerate() {
        sets[p].insert(branch[c]);
    }
    for path in &paths {
        let owner = path[0].min(*path.last().unwrap());
        let p = iso.iter().position(|&c| branch[c] == owner).unwrap();
        for &v in &path[1..path.len() - 1] {
            sets[p].insert(v);
        }
    }
    let model = MinorModel { branch_sets: sets };
    model.validate(g, &pattern)?;
    Ok(Some(KuratowskiWitness { kind, model }))
}

// ---------------------------------------------------------------------------
// Planarity preservation under crossedge contraction
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct PreservationReport {
    /// Planarity of the region torso at each stage, starting with the
    /// uncontracted graph and ending with all crossedges contracted.
    pub torso_planarity: Vec<bool>,
    /// Number of contraction steps performed.
    pub steps: usize,
    /// Both planarity implementations agreed on every torso.
    pub oracle_agreement: bool,
    /// Crossedges examined for the fence claims, over all stages.
    pub crossedges_checked: usize,
}

/// Follow the chain of single-crossedge contractions; at each stage check
/// the fence claims on every crossedge and verify that planarity of the
/// contracted region torso implies planarity of the uncontracted one. Any
/// violated claim is an error carrying the witness.
pub fn check_planarity_preservation(g: &Graph, t: &Tangle) -> Result<PreservationReport> {
    let mut host = g.clone();
    let mut tangle = t.clone();
    let mut torso_planarity = Vec::new();
    let mut oracle_agreement = true;
    let mut crossedges_checked = 0;
    let mut steps = 0;
    loop {
        let r = region_r(&host, &tangle)?;
        let (h, _) = torso(&host, &r)?;
        let planar = is_planar(&h)?;
        let oracle = crate::oracle::planar_minor_oracle(&h)?;
        if planar != oracle {
            return Err(Error::Violation(format!(
                "planarity implementations disagree on a stage-{steps} torso"
            )));
        }
        oracle_agreement &= planar == oracle;
        torso_planarity.push(planar);
        crossedges_checked += check_fence_claims(&host, &tangle, &r)?;
        let cross = crossedges(&host, &tangle)?;
        let Some(&edge) = cross.first() else { break };
        let (cm, next) = crate::contraction::induced_tangle(&host, &tangle, &[edge])?;
        host = cm.target;
        tangle = next;
        steps += 1;
    }
    // The implication chain: planar at stage i+1 forces planar at stage i.
    for w in torso_planarity.windows(2) {
        if w[1] && !w[0] {
            return Err(Error::Violation(
                "contracted region torso planar but uncontracted one is not".into(),
            ));
        }
    }
    if *torso_planarity.last().unwrap() && !torso_planarity[0] {
        return Err(Error::Violation("end-to-end planarity implication fails".into()));
    }
    Ok(PreservationReport { torso_planarity, steps, oracle_agreement, crossedges_checked })
}

/// For every crossing pair of non-degenerate minimal separations, check in
/// the region torso that each fence is a triangle and that the crossedge
/// endpoints see exactly the opposite fence (minus themselves) plus their
/// crossedge partner.
fn check_fence_claims(g: &Graph, t: &Tangle, r: &VSet) -> Result<usize> {
    let (h, map) = torso(g, r)?;
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    let nd = nondegenerate_minimal(g, t)?;
    let mut checked = 0;
    for (i, a) in nd.iter().enumerate() {
        for b in &nd[i + 1..] {
            let PairClass::Crossing(s1, s2) = classify_pair(g, a, b) else { continue };
            checked += 1;
            for (sx, sy, far) in [(s1, s2, b), (s2, s1, a)] {
                let fc = fence(g, t, far)?;
                check_triangle(&h, &inv, &fc, far)?;
                let mut expect = fc.clone();
                expect.remove(sx);
                expect.insert(sy);
                let actual: BTreeSet<usize> =
                    h.neighbors(inv[sx]).iter().map(|&w| map[w]).collect();
                let expected: BTreeSet<usize> = expect.iter().collect();
                if actual != expected {
                    return Err(Error::Violation(format!(
                        "crossedge endpoint {sx} has torso neighborhood {actual:?}, expected {expected:?}"
                    )));
                }
            }
        }
    }
    Ok(checked)
}

fn check_triangle(h: &Graph, inv: &[usize], fc: &VSet, sep: &Separation) -> Result<()> {
    let vs: Vec<usize> = fc.to_vec();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if !h.has_edge(inv[u], inv[v]) {
                return Err(Error::Violation(format!(
                    "fence of separator {:?} is not a triangle in the region torso: {u},{v} non-adjacent",
                    sep.s.to_vec()
                )));
            }
        }
    }
    Ok(())
}
