//! `uchord`: recognition, decomposition, coloring and clique finding for
//! graphs with no cycle with a unique chord.
//!
//! Exit codes: 0 on success (and for `IN_C` / `AGREE`), 1 for `NOT_IN_C`,
//! a refused coloring or `DISAGREE`, 2 for any error.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use uchord_core::chromatic::{max_clique, optimal_coloring, ColorError, Coloring};
use uchord_core::compose::{
    make_heawood, make_no_transversal_fixture, make_petersen, random_c_graph, two_subdivision,
    GenConfig,
};
use uchord_core::decomp::{build_proper_tree, recognize, DecompTree, NodeKind};
use uchord_core::oracle::{has_unique_chord_cycle, UNIQUE_CHORD_LIMIT};
use uchord_core::{parse_edge_list, Graph};

#[derive(Parser)]
#[command(name = "uchord", version, about = "Graphs with no cycle with a unique chord")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Petersen,
    Heawood,
    RandomC,
    #[value(name = "2subdiv")]
    TwoSubdiv,
    FixtureNoTransversal,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership; prints IN_C or NOT_IN_C and the verdict as JSON.
    Recognize {
        /// Edge-list file, or `-` for standard input.
        path: String,
    },
    /// Print a proper decomposition tree.
    Tree {
        path: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print an optimal coloring; refuses graphs outside the class.
    Color {
        path: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print a maximum clique.
    Clique {
        path: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Generate a graph.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        /// Input graph for `2subdiv`.
        path: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Target node count for `random-c`.
        #[arg(long, default_value_t = 30)]
        size: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Compare the recognizer with the brute-force oracle.
    Verify { path: String },
}

type Failure = Box<dyn std::error::Error>;

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    Ok(parse_edge_list(&text)?)
}

fn unsupported(what: &str, format: Format) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Edgelist => "edgelist",
    };
    format!("{what} has no {name} output").into()
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) -> Result<(), Failure> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn tree_dot(tree: &DecompTree) -> String {
    let mut out = String::from("digraph T {\n");
    for (id, node) in tree.nodes.iter().enumerate() {
        let kind = match &node.kind {
            NodeKind::Leaf(_) => "leaf",
            NodeKind::Type1(_) => "type1",
            NodeKind::Type2(_) => "type2",
        };
        writeln!(out, "  {id} [label=\"{id}: {kind}, {} nodes\"];", node.graph.node_count()).unwrap();
        for c in &node.children {
            writeln!(out, "  {id} -> {c};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn coloring_dot(g: &Graph, c: &Coloring) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.nodes() {
        writeln!(out, "  {v} [label=\"{v}\", color_class={}];", c.color[v]).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn cmd_recognize(path: &str) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    let verdict = recognize(&g);
    emit(&format!("{}\n", if verdict.in_c() { "IN_C" } else { "NOT_IN_C" }))?;
    emit(&format!("{}\n", compact(&verdict.to_json())))?;
    Ok(if verdict.in_c() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_tree(path: &str, format: Format) -> Result<ExitCode, Failure> {
    if format == Format::Edgelist {
        return Err(unsupported("tree", format));
    }
    let g = read_graph(path)?;
    let verdict = recognize(&g);
    if !verdict.in_c() {
        emit("NOT_IN_C\n")?;
        emit(&format!("{}\n", compact(&verdict.to_json())))?;
        return Ok(ExitCode::from(1));
    }
    let mut trees = Vec::new();
    for comp in g.connected_components() {
        let (h, back) = g.induced_subgraph(&comp)?;
        let tree = build_proper_tree(&h)?.map_err(|v| format!("inconsistent verdict: {v}"))?;
        trees.push((back, tree));
    }
    let out = match (format, trees.as_slice()) {
        (Format::Dot, [(_, tree)]) => tree_dot(tree),
        (Format::Dot, _) => return Err("dot output needs a connected graph".into()),
        (_, [(_, tree)]) => compact(&tree.to_json()),
        _ => {
            let parts: Vec<Value> = trees
                .iter()
                .map(|(back, tree)| json!({ "nodes": back, "tree": tree.to_json() }))
                .collect();
            compact(&json!({ "components": parts }))
        }
    };
    emit(&format!("{}\n", out.trim_end()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_color(path: &str, format: Format) -> Result<ExitCode, Failure> {
    if format == Format::Edgelist {
        return Err(unsupported("color", format));
    }
    let g = read_graph(path)?;
    match optimal_coloring(&g) {
        Ok(c) if format == Format::Dot => emit(&coloring_dot(&g, &c))?,
        Ok(c) => emit(&format!("{}\n", compact(&serde_json::to_value(&c)?)))?,
        Err(ColorError::NotInC(v)) => {
            emit("NOT_IN_C\n")?;
            emit(&format!("{}\n", compact(&serde_json::to_value(&v)?)))?;
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_clique(path: &str, format: Option<Format>) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    let k = max_clique(&g);
    match format {
        None => {
            let ids: Vec<String> = k.iter().map(|v| v.to_string()).collect();
            emit(&format!("size {}\nnodes {}\n", k.len(), ids.join(" ")))?;
        }
        Some(Format::Json) => emit(&format!("{}\n", compact(&json!({ "size": k.len(), "nodes": k }))))?,
        Some(f) => return Err(unsupported("clique", f)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(kind: Kind, path: Option<&str>, seed: u64, size: usize, format: Format) -> Result<ExitCode, Failure> {
    let mut log = None;
    let g = match kind {
        Kind::Petersen => make_petersen(),
        Kind::Heawood => make_heawood(),
        Kind::FixtureNoTransversal => make_no_transversal_fixture(),
        Kind::TwoSubdiv => {
            let path = path.ok_or("2subdiv needs an input graph")?;
            two_subdivision(&read_graph(path)?)
        }
        Kind::RandomC => {
            let generated = random_c_graph(seed, size, &GenConfig::default());
            log = Some(serde_json::to_value(&generated.log)?);
            generated.graph
        }
    };
    match format {
        Format::Edgelist => emit(&g.to_edge_list())?,
        Format::Dot => emit(&g.to_dot())?,
        Format::Json => {
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            let mut out = json!({ "n": g.node_count(), "edges": edges });
            if let Some(log) = log {
                out["log"] = log;
            }
            emit(&format!("{}\n", compact(&out)))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(path: &str) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    if g.node_count() > UNIQUE_CHORD_LIMIT {
        return Err(format!(
            "refusing to verify: {} nodes exceed the oracle limit of {UNIQUE_CHORD_LIMIT}",
            g.node_count()
        )
        .into());
    }
    let ours = recognize(&g).in_c();
    let witness = has_unique_chord_cycle(&g)?;
    let agree = ours == witness.is_none();
    let detail = json!({ "recognizer_in_c": ours, "oracle_in_c": witness.is_none(), "oracle_witness": witness });
    emit(&format!("{}\n{}\n", if agree { "AGREE" } else { "DISAGREE" }, compact(&detail)))?;
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Recognize { path } => cmd_recognize(path),
        Command::Tree { path, format } => cmd_tree(path, *format),
        Command::Color { path, format } => cmd_color(path, *format),
        Command::Clique { path, format } => cmd_clique(path, *format),
        Command::Gen { kind, path, seed, size, format } => cmd_gen(*kind, path.as_deref(), *seed, *size, *format),
        Command::Verify { path } => cmd_verify(path),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
