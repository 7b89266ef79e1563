use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::DecompError;
use crate::compose::{make_heawood, make_petersen};
use crate::embed::find_induced_embedding;
use crate::graph::{Graph, NodeSet};

/// Which basic class a graph belongs to, with a checkable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasicKind {
    Clique { size: usize },
    LongHole { length: usize },
    /// `x` holds the degree-2 nodes, `y` the nodes of degree at least 3.
    Strongly2Bipartite { x: NodeSet, y: NodeSet },
    /// `embedding[v]` is the Petersen node that `v` maps to.
    PetersenSub { embedding: Vec<usize> },
    HeawoodSub { embedding: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedGraph {
    Petersen,
    Heawood,
}

impl FixedGraph {
    pub fn graph(self) -> &'static Graph {
        static PETERSEN: OnceLock<Graph> = OnceLock::new();
        static HEAWOOD: OnceLock<Graph> = OnceLock::new();
        match self {
            FixedGraph::Petersen => PETERSEN.get_or_init(make_petersen),
            FixedGraph::Heawood => HEAWOOD.get_or_init(make_heawood),
        }
    }
}

/// Induced embedding of `g` into the Petersen or Heawood graph, if any.
pub fn is_induced_subgraph_of_fixed(g: &Graph, target: FixedGraph) -> Option<Vec<usize>> {
    let host = target.graph();
    if g.node_count() > host.node_count() || g.nodes().any(|v| g.degree(v) > 3) {
        return None;
    }
    match target {
        FixedGraph::Petersen => {
            if g.find_triangle().is_some() || g.find_square().is_some() {
                return None;
            }
        }
        FixedGraph::Heawood => {
            if !g.is_bipartite() || g.find_square().is_some() {
                return None;
            }
        }
    }
    find_induced_embedding(g, host)
}

/// Basic class of a connected graph, or `None` when `g` is not basic.
/// When several classes apply the first of clique, long hole, strongly
/// 2-bipartite, Petersen subgraph and Heawood subgraph wins.
pub fn classify_basic(g: &Graph) -> Result<Option<BasicKind>, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    Ok(classify_connected(g))
}

pub(crate) fn classify_connected(g: &Graph) -> Option<BasicKind> {
    let n = g.node_count();
    if g.is_clique() {
        return Some(BasicKind::Clique { size: n });
    }
    if n >= 7 && g.nodes().all(|v| g.degree(v) == 2) {
        return Some(BasicKind::LongHole { length: n });
    }
    if let Some((x, y)) = strongly_2_bipartite(g) {
        return Some(BasicKind::Strongly2Bipartite { x, y });
    }
    if let Some(embedding) = is_induced_subgraph_of_fixed(g, FixedGraph::Petersen) {
        return Some(BasicKind::PetersenSub { embedding });
    }
    if let Some(embedding) = is_induced_subgraph_of_fixed(g, FixedGraph::Heawood) {
        return Some(BasicKind::HeawoodSub { embedding });
    }
    None
}

fn strongly_2_bipartite(g: &Graph) -> Option<(NodeSet, NodeSet)> {
    if g.nodes().any(|v| g.degree(v) < 2) {
        return None;
    }
    let low = |v: usize| g.degree(v) == 2;
    // Every edge must join a degree-2 node to a node of degree at least 3.
    if g.edges().any(|(u, v)| low(u) == low(v)) {
        return None;
    }
    if g.find_square().is_some() {
        return None;
    }
    let x = g.nodes().filter(|&v| low(v)).collect();
    let y = g.nodes().filter(|&v| !low(v)).collect();
    Some((x, y))
}
