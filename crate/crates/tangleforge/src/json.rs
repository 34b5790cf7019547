//! Versioned JSON (and DOT) serialization of graphs, separations, tangles,
//! tree-decompositions, contractions, witnesses and reports. Every JSON
//! object carries "schema": "tangleforge/1" and round-trips through the
//! corresponding from_json function.

use crate::contraction::ContractionMap;
use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::{KuratowskiKind, KuratowskiWitness, PreservationReport};
use crate::separation::Separation;
use crate::tangle::Tangle;
use crate::vset::VSet;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "tangleforge/1";

fn expect_schema(v: &Value) -> Result<()> {
    match v.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) => Ok(()),
        Some(other) => Err(Error::Invalid(format!("unsupported schema '{other}'"))),
        None => Err(Error::Invalid("missing schema field".into())),
    }
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Invalid(format!("missing field '{key}'")))
}

fn as_usize(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| Error::Invalid("expected an integer".into()))
}

fn usize_list(v: &Value) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| Error::Invalid("expected an array".into()))?
        .iter()
        .map(as_usize)
        .collect()
}

fn pair_list(v: &Value) -> Result<Vec<(usize, usize)>> {
    v.as_array()
        .ok_or_else(|| Error::Invalid("expected an array".into()))?
        .iter()
        .map(|p| {
            let xs = usize_list(p)?;
            if xs.len() != 2 {
                return Err(Error::Invalid("expected a pair".into()));
            }
            Ok((xs[0], xs[1]))
        })
        .collect()
}

fn set_json(s: &VSet) -> Value {
    json!(s.to_vec())
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

pub fn graph_to_json(g: &Graph) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("n".into(), json!(g.n()));
    obj.insert("edges".into(), json!(g.edges()));
    if let Some(labels) = (0..g.n()).map(|v| g.label(v)).collect::<Option<Vec<_>>>() {
        obj.insert("labels".into(), json!(labels));
    }
    Value::Object(obj)
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    expect_schema(v)?;
    let n = as_usize(get(v, "n")?)?;
    let edges = pair_list(get(v, "edges")?)?;
    let mut g = Graph::new(n, &edges)?;
    if let Some(labels) = v.get("labels") {
        let labels: Vec<String> = labels
            .as_array()
            .ok_or_else(|| Error::Invalid("labels must be an array".into()))?
            .iter()
            .map(|l| l.as_str().map(String::from))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Invalid("labels must be strings".into()))?;
        if labels.len() != n {
            return Err(Error::Invalid("label count differs from n".into()));
        }
        g = g.with_labels(labels);
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Separations and tangles
// ---------------------------------------------------------------------------

pub fn separation_to_json(sep: &Separation) -> Value {
    json!({
        "schema": SCHEMA,
        "y": sep.y.to_vec(),
        "s": sep.s.to_vec(),
        "z": sep.z.to_vec(),
    })
}

pub fn separation_from_json(g: &Graph, v: &Value) -> Result<Separation> {
    expect_schema(v)?;
    let n = g.n();
    let mk = |key: &str| -> Result<VSet> {
        let xs = usize_list(get(v, key)?)?;
        if xs.iter().any(|&x| x >= n) {
            return Err(Error::Invalid(format!("vertex out of range in '{key}'")));
        }
        Ok(VSet::from_iter(n, xs))
    };
    Separation::new(g, mk("y")?, mk("s")?, mk("z")?)
}

/// A tangle is serialized through its proper members; the non-proper block
/// is implicit.
pub fn tangle_to_json(t: &Tangle) -> Value {
    json!({
        "schema": SCHEMA,
        "order": t.k,
        "members": t.proper_members().iter().map(|s| separation_to_json(s)).collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// Tree-decompositions
// ---------------------------------------------------------------------------

pub fn td_to_json(td: &TreeDecomposition) -> Value {
    json!({
        "schema": SCHEMA,
        "host_n": td.host_n,
        "nodes": td
            .bags
            .iter()
            .enumerate()
            .map(|(id, bag)| json!({"id": id, "bag": bag.to_vec()}))
            .collect::<Vec<_>>(),
        "tree_edges": td.tree_edges,
        "adhesion": td.adhesion(),
        "width": td.width(),
    })
}

pub fn td_from_json(v: &Value) -> Result<TreeDecomposition> {
    expect_schema(v)?;
    let host_n = as_usize(get(v, "host_n")?)?;
    let nodes = get(v, "nodes")?
        .as_array()
        .ok_or_else(|| Error::Invalid("nodes must be an array".into()))?;
    let mut bags = vec![None; nodes.len()];
    for node in nodes {
        let id = as_usize(get(node, "id")?)?;
        let bag = usize_list(get(node, "bag")?)?;
        if id >= bags.len() || bags[id].is_some() {
            return Err(Error::Invalid("node ids must be 0..len, each once".into()));
        }
        if bag.iter().any(|&x| x >= host_n) {
            return Err(Error::Invalid("bag vertex out of range".into()));
        }
        bags[id] = Some(VSet::from_iter(host_n, bag));
    }
    let bags: Vec<VSet> = bags.into_iter().map(Option::unwrap).collect();
    let tree_edges = pair_list(get(v, "tree_edges")?)?;
    if tree_edges.iter().any(|&(a, b)| a >= bags.len() || b >= bags.len()) {
        return Err(Error::Invalid("tree edge endpoint out of range".into()));
    }
    Ok(TreeDecomposition { host_n, bags, tree_edges })
}

// ---------------------------------------------------------------------------
// Contractions, witnesses, reports, actions
// ---------------------------------------------------------------------------

pub fn contraction_to_json(cm: &ContractionMap) -> Value {
    json!({
        "schema": SCHEMA,
        "matching": cm.matching,
        "forward": cm.forward,
    })
}

pub fn witness_to_json(w: &KuratowskiWitness) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": match w.kind { KuratowskiKind::K5 => "K5", KuratowskiKind::K33 => "K3,3" },
        "branch_sets": w.model.branch_sets.iter().map(set_json).collect::<Vec<_>>(),
    })
}

pub fn preservation_report_to_json(r: &PreservationReport) -> Value {
    json!({
        "schema": SCHEMA,
        "torso_planarity": r.torso_planarity,
        "steps": r.steps,
        "oracle_agreement": r.oracle_agreement,
        "crossedges_checked": r.crossedges_checked,
    })
}

/// Group action generators: {"generators": [[img0, img1, ...], ...]}.
pub fn action_from_json(v: &Value, n: usize) -> Result<Vec<Vec<usize>>> {
    expect_schema(v)?;
    let gens = get(v, "generators")?
        .as_array()
        .ok_or_else(|| Error::Invalid("generators must be an array".into()))?;
    gens.iter()
        .map(|p| {
            let perm = usize_list(p)?;
            if perm.len() != n {
                return Err(Error::Invalid("generator length differs from n".into()));
            }
            Ok(perm)
        })
        .collect()
}

pub fn action_to_json(generators: &[Vec<usize>]) -> Value {
    json!({"schema": SCHEMA, "generators": generators})
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => out.push_str(&format!("  {v} [label=\"{l}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn td_to_dot(td: &TreeDecomposition) -> String {
    let mut out = String::from("graph TD {\n  node [shape=box];\n");
    for (id, bag) in td.bags.iter().enumerate() {
        let members: Vec<String> = bag.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("  {id} [label=\"{{{}}}\"];\n", members.join(",")));
    }
    for &(a, b) in &td.tree_edges {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}
