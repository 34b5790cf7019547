//! Command-line front end: reads a graph from standard input (JSON, graph6
//! or an edge list), runs the requested analysis, and writes JSON, DOT or
//! graph6 to standard output. Exit codes: 0 success, 1 property violation or
//! invalid input, 2 resource budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Read as _;
use std::process::ExitCode;
use tangleforge::contraction::{contract_matching, ContractionMap};
use tangleforge::decomposition::{
    block_cut_tree, closed_walk_generators, grohe_decomposition, structure_decomposition,
    tangle_distinguishing_td, tutte_decomposition, validate_td, TreeDecomposition,
};
use tangleforge::error::{Error, Result};
use tangleforge::families::FamilySpec;
use tangleforge::graph::{graph6_decode, graph6_encode, parse_edge_list, Graph};
use tangleforge::json as tj;
use tangleforge::symmetry::{automorphisms, is_canonical_td, GroupAction};
use tangleforge::tangle::{
    core_x, crossedges, enumerate_tangles_budgeted, minimal_separations, nondegenerate_minimal,
    region_r, SEARCH_NODE_BUDGET,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Dot,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Blocks,
    Tutte,
    Distinguish,
    Grohe,
    Structure,
}

#[derive(Parser)]
#[command(name = "tangleforge", version, about = "Finite-graph structural decompositions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutFormat,
    /// Seed reserved for harnesses that generate random instances.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Search node budget for tangle enumeration.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate order-4 tangles of the input graph with their derived sets.
    Tangles {
        /// Tangle order (2..=4).
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Compute a tree-decomposition of the input graph.
    Decompose {
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Contract a matching, or all crossedges of the unique order-4 tangle.
    Contract {
        /// Comma-separated list like "0-3,5-7", or "all-crossedges".
        #[arg(long)]
        edges: String,
    },
    /// Validate a tree-decomposition, optionally checking canonicity.
    Check {
        /// Tree-decomposition JSON file.
        #[arg(long)]
        td: String,
        /// Group action JSON file ({"generators": [...]}).
        #[arg(long)]
        action: Option<String>,
    },
    /// Decide planarity of the input graph.
    Planar {
        /// On a nonplanar input, also emit a K5 or K3,3 witness.
        #[arg(long)]
        witness: bool,
    },
    /// Closed-walk generators relative to a tree-decomposition.
    Walks {
        #[arg(long)]
        td: String,
    },
    /// Generate a named family instance with its symmetry generators.
    Gen {
        #[arg(long)]
        family: String,
        /// Comma-separated numeric parameters.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
    },
}

fn read_stdin_graph() -> Result<Graph> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::Invalid(format!("cannot read stdin: {e}")))?;
    let trimmed = buf.trim();
    if trimmed.is_empty() {
        return Err(Error::Invalid("empty input".into()));
    }
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::Invalid(format!("bad JSON input: {e}")))?;
        return tj::graph_from_json(&v);
    }
    if trimmed.lines().count() == 1 && !trimmed.contains(char::is_whitespace) {
        return graph6_decode(trimmed.as_bytes());
    }
    parse_edge_list(buf.as_bytes())
}

fn read_json_file(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("bad JSON in {path}: {e}")))
}

fn emit_td(td: &TreeDecomposition, format: OutFormat, extra: Option<Value>) -> Result<()> {
    match format {
        OutFormat::Dot => print!("{}", tj::td_to_dot(td)),
        OutFormat::Graph6 | OutFormat::Json => {
            let mut v = tj::td_to_json(td);
            if let (Some(obj), Some(Value::Object(ex))) = (v.as_object_mut(), extra) {
                for (k, val) in ex {
                    obj.insert(k, val);
                }
            }
            println!("{v}");
        }
    }
    Ok(())
}

fn action_for(g: &Graph) -> GroupAction {
    automorphisms(g).unwrap_or_else(|_| GroupAction::trivial(g.n()))
}

fn parse_matching(spec: &str) -> Result<Vec<(usize, usize)>> {
    spec.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let parts: Vec<&str> = t.split('-').collect();
            if parts.len() != 2 {
                return Err(Error::Invalid(format!("bad edge token '{t}'")));
            }
            let u = parts[0].trim().parse().map_err(|_| Error::Invalid(format!("bad vertex in '{t}'")))?;
            let v = parts[1].trim().parse().map_err(|_| Error::Invalid(format!("bad vertex in '{t}'")))?;
            Ok((u, v))
        })
        .collect()
}

fn unique_tangle_crossedges(g: &Graph, budget: u64) -> Result<Vec<(usize, usize)>> {
    let tangles = enumerate_tangles_budgeted(g, 4, budget)?;
    match tangles.len() {
        1 => crossedges(g, &tangles[0]),
        n => Err(Error::Invalid(format!(
            "all-crossedges needs a unique order-4 tangle, found {n}"
        ))),
    }
}

fn emit_contraction(g: &Graph, cm: &ContractionMap, format: OutFormat) {
    match format {
        OutFormat::Graph6 => println!("{}", graph6_encode(&cm.target)),
        OutFormat::Dot => print!("{}", tj::graph_to_dot(&cm.target)),
        OutFormat::Json => {
            let mut v = tj::contraction_to_json(cm);
            let obj = v.as_object_mut().unwrap();
            obj.insert("source".into(), tj::graph_to_json(g));
            obj.insert("target".into(), tj::graph_to_json(&cm.target));
            println!("{v}");
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let budget = cli.budget.unwrap_or(SEARCH_NODE_BUDGET);
    match cli.command {
        Command::Tangles { order } => {
            let g = read_stdin_graph()?;
            let tangles = enumerate_tangles_budgeted(&g, order, budget)?;
            let mut items = Vec::new();
            for t in &tangles {
                let mut obj = serde_json::Map::new();
                obj.insert("order".into(), json!(t.k));
                let minimal: Vec<Value> =
                    minimal_separations(t).iter().map(tj::separation_to_json).collect();
                obj.insert("minimal".into(), json!(minimal));
                if order == 4 && tangleforge::graph::is_k_connected(&g, 3) {
                    let nd: Vec<Value> = nondegenerate_minimal(&g, t)?
                        .iter()
                        .map(tj::separation_to_json)
                        .collect();
                    obj.insert("nondegenerate_minimal".into(), json!(nd));
                    obj.insert("crossedges".into(), json!(crossedges(&g, t)?));
                    obj.insert("core_x".into(), json!(core_x(&g, t)?.to_vec()));
                    obj.insert("region_r".into(), json!(region_r(&g, t)?.to_vec()));
                }
                items.push(Value::Object(obj));
            }
            println!("{}", json!({"schema": tj::SCHEMA, "tangles": items}));
        }
        Command::Decompose { mode } => {
            let g = read_stdin_graph()?;
            match mode {
                Mode::Blocks => emit_td(&block_cut_tree(&g)?, cli.format, None)?,
                Mode::Tutte => emit_td(&tutte_decomposition(&g)?, cli.format, None)?,
                Mode::Distinguish => {
                    let tangles = enumerate_tangles_budgeted(&g, 4, budget)?;
                    let action = action_for(&g);
                    let (td, report) = tangle_distinguishing_td(&g, &tangles, &action)?;
                    emit_td(
                        &td,
                        cli.format,
                        Some(json!({"fallback_used": report.fallback_used})),
                    )?;
                }
                Mode::Grohe => emit_td(&grohe_decomposition(&g)?, cli.format, None)?,
                Mode::Structure => {
                    let action = action_for(&g);
                    let (td, report) = structure_decomposition(&g, &action)?;
                    let torsos: Vec<Value> = report
                        .torsos
                        .iter()
                        .map(|t| {
                            json!({
                                "bag": t.bag,
                                "quasi_4_connected": t.quasi_4_connected,
                                "planar": t.planar,
                                "contracted_quasi_4_connected": t.contracted_quasi_4_connected,
                                "treewidth": t.treewidth,
                            })
                        })
                        .collect();
                    emit_td(&td, cli.format, Some(json!({"torsos": torsos})))?;
                }
            }
        }
        Command::Contract { edges } => {
            let g = read_stdin_graph()?;
            let matching = if edges == "all-crossedges" {
                unique_tangle_crossedges(&g, budget)?
            } else {
                parse_matching(&edges)?
            };
            let cm = contract_matching(&g, &matching)?;
            emit_contraction(&g, &cm, cli.format);
        }
        Command::Check { td, action } => {
            let g = read_stdin_graph()?;
            let td = tj::td_from_json(&read_json_file(&td)?)?;
            let report = validate_td(&g, &td)?;
            let canonical = match action {
                Some(path) => {
                    let gens = tj::action_from_json(&read_json_file(&path)?, g.n())?;
                    let act = GroupAction::new(&g, gens)?;
                    match is_canonical_td(&td, &act) {
                        Ok(_) => Some(true),
                        Err(gi) => {
                            return Err(Error::Violation(format!(
                                "decomposition is not invariant under generator {gi}"
                            )))
                        }
                    }
                }
                None => None,
            };
            println!(
                "{}",
                json!({
                    "schema": tj::SCHEMA,
                    "valid": true,
                    "width": report.width,
                    "adhesion": report.adhesion,
                    "edges_tight": report.edges_tight,
                    "edges_nondegenerate": report.edges_nondegenerate,
                    "canonical": canonical,
                })
            );
        }
        Command::Planar { witness } => {
            let g = read_stdin_graph()?;
            let planar = tangleforge::planarity::is_planar(&g)?;
            let wit = if witness && !planar {
                tangleforge::planarity::kuratowski_witness(&g)?.map(|w| tj::witness_to_json(&w))
            } else {
                None
            };
            println!("{}", json!({"schema": tj::SCHEMA, "planar": planar, "witness": wit}));
        }
        Command::Walks { td } => {
            let g = read_stdin_graph()?;
            let td = tj::td_from_json(&read_json_file(&td)?)?;
            let walks = closed_walk_generators(&g, &td)?;
            let items: Vec<Value> = walks.iter().map(|w| json!(w.vertices)).collect();
            println!("{}", json!({"schema": tj::SCHEMA, "walks": items}));
        }
        Command::Gen { family, params } => {
            let spec = FamilySpec::parse(&family, &params)?;
            let fam = spec.generate()?;
            match cli.format {
                OutFormat::Graph6 => println!("{}", graph6_encode(&fam.graph)),
                OutFormat::Dot => print!("{}", tj::graph_to_dot(&fam.graph)),
                OutFormat::Json => {
                    let mut v = tj::graph_to_json(&fam.graph);
                    v.as_object_mut()
                        .unwrap()
                        .insert("action".into(), tj::action_to_json(&fam.action.generators));
                    println!("{v}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Budget(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
