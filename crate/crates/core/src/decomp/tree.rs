use serde_json::{json, Value};

use super::basic::classify_connected;
use super::blocks::{blocks_unchecked, Block};
use super::cutsets::{one_cutset_unchecked, proper_2cutset_unchecked};
use super::join::{find_1join, properness};
use super::{BasicKind, BlockMode, DecompError, Marker, NotInC, Split, Witness};
use crate::graph::{Graph, NodeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(BasicKind),
    /// Decomposed by a 1-cutset or a proper 1-join.
    Type1(Split),
    /// Decomposed by a proper 2-cutset.
    Type2(Split),
}

impl NodeKind {
    pub fn split(&self) -> Option<&Split> {
        match self {
            NodeKind::Leaf(_) => None,
            NodeKind::Type1(s) | NodeKind::Type2(s) => Some(s),
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            NodeKind::Leaf(_) => "leaf",
            NodeKind::Type1(_) => "type1",
            NodeKind::Type2(_) => "type2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompNode {
    pub graph: Graph,
    pub kind: NodeKind,
    pub parent: Option<usize>,
    /// Ids of the `X` block then the `Y` block.
    pub children: Vec<usize>,
    /// Marker of this node as a block of its parent.
    pub marker: Option<Marker>,
    /// Parent id of every node; `None` for a fresh marker.
    pub to_parent: Vec<Option<usize>>,
}

/// Proper decomposition tree; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompTree {
    pub nodes: Vec<DecompNode>,
}

impl DecompTree {
    pub fn root(&self) -> &DecompNode {
        &self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Root id of node `local` of tree node `id`, if it is not a marker.
    pub fn origin(&self, mut id: usize, mut local: usize) -> Option<usize> {
        loop {
            let node = &self.nodes[id];
            let Some(parent) = node.parent else {
                return Some(local);
            };
            local = node.to_parent[local]?;
            id = parent;
        }
    }

    pub fn origins(&self, id: usize) -> Vec<Option<usize>> {
        (0..self.nodes[id].graph.node_count())
            .map(|v| self.origin(id, v))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(id, node)| {
                json!({
                    "id": id,
                    "kind": node.kind.tag(),
                    "node_count": node.graph.node_count(),
                    "split": node.kind.split(),
                    "marker": node.marker,
                    "children": node.children,
                    "leaf_basic_kind": match &node.kind {
                        NodeKind::Leaf(b) => serde_json::to_value(b).ok(),
                        _ => None,
                    },
                    "origin": self.origins(id),
                })
            })
            .collect();
        json!({ "root": 0, "nodes": nodes })
    }
}

/// Builds a proper decomposition tree of a connected graph, or stops at the
/// first step that proves `g` is not in C.
///
/// Each graph is handled by the first rule that applies: a basic graph is a
/// leaf; a 1-cutset, then a 1-join (rejected if not proper), then a proper
/// 2-cutset give the children.
pub fn build_proper_tree(g: &Graph) -> Result<Result<DecompTree, NotInC>, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    let rep = (0..g.node_count()).map(Some).collect();
    Ok(decompose(g.clone(), rep, true).map(|nodes| DecompTree { nodes }))
}

/// A graph waiting to be decomposed.
struct Work {
    graph: Graph,
    /// Input node each node stands for. A 1-join marker stands for a node
    /// of the opposite special set; a fresh 2-cutset marker for none.
    rep: Vec<Option<usize>>,
    slot: usize,
    parent: Option<usize>,
    marker: Option<Marker>,
    to_parent: Vec<Option<usize>>,
}

fn decide(h: &Graph) -> Result<NodeKind, NotInC> {
    if let Some(basic) = classify_connected(h) {
        Ok(NodeKind::Leaf(basic))
    } else if let Some(split) = one_cutset_unchecked(h) {
        Ok(NodeKind::Type1(split))
    } else if let Some(join) = find_1join(h) {
        properness(h, &join).map(NodeKind::Type1)
    } else {
        proper_2cutset_unchecked(h).map(NodeKind::Type2)
    }
}

/// Runs the decomposition. Without `record` every graph is dropped once
/// split and the returned arena is empty.
fn decompose(g: Graph, rep: Vec<Option<usize>>, record: bool) -> Result<Vec<DecompNode>, NotInC> {
    let n = g.node_count();
    let mut slots: Vec<Option<DecompNode>> = vec![None];
    let mut stack = vec![Work {
        graph: g,
        rep,
        slot: 0,
        parent: None,
        marker: None,
        to_parent: (0..n).map(Some).collect(),
    }];
    while let Some(w) = stack.pop() {
        let kind = decide(&w.graph).map_err(|v| lift(v, &w.rep))?;
        let mut children = Vec::new();
        if let Some(split) = kind.split() {
            let (bx, by) = blocks_unchecked(&w.graph, split, BlockMode::Proper);
            let join = match split {
                Split::ProperOneJoin { a, b, .. } => Some((a, b)),
                _ => None,
            };
            let mut pair = Vec::with_capacity(2);
            for (i, block) in [bx, by].into_iter().enumerate() {
                let Block { graph, to_parent, marker } = block;
                let rep = to_parent
                    .iter()
                    .map(|p| match (p, join) {
                        (Some(p), _) => w.rep[*p],
                        (None, Some((a, b))) => {
                            let opposite = if i == 0 { b } else { a };
                            opposite.iter().find_map(|x| w.rep[x])
                        }
                        (None, None) => None,
                    })
                    .collect();
                let slot = if record {
                    slots.push(None);
                    slots.len() - 1
                } else {
                    0
                };
                children.push(slot);
                pair.push(Work { graph, rep, slot, parent: Some(w.slot), marker, to_parent });
            }
            // Larger block first keeps the pending blocks small.
            pair.sort_by_key(|b| b.graph.node_count());
            stack.extend(pair);
        }
        if record {
            slots[w.slot] = Some(DecompNode {
                graph: w.graph,
                kind,
                parent: w.parent,
                children,
                marker: w.marker,
                to_parent: w.to_parent,
            });
        }
    }
    Ok(if record { slots.into_iter().map(|s| s.expect("every slot is filled")).collect() } else { Vec::new() })
}

fn lift(verdict: NotInC, rep: &[Option<usize>]) -> NotInC {
    let up = |v: usize| rep[v];
    let witness = verdict.witness.and_then(|w| match w {
        Witness::Triangle { nodes } => {
            let mut lifted = [up(nodes[0])?, up(nodes[1])?, up(nodes[2])?];
            lifted.sort_unstable();
            Some(Witness::Triangle { nodes: lifted })
        }
        Witness::AttachedPath { a, b, path } => Some(Witness::AttachedPath {
            a: up(a)?,
            b: up(b)?,
            path: path.into_iter().map(up).collect::<Option<Vec<_>>>()?,
        }),
        Witness::AdjacentCutset { a, b } => Some(Witness::AdjacentCutset { a: up(a)?, b: up(b)? }),
    });
    NotInC { step: verdict.step, witness }
}

/// Outcome for one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub nodes: NodeSet,
    /// Rejection with witness ids of the input graph.
    pub result: Result<(), NotInC>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    pub components: Vec<ComponentVerdict>,
}

impl Recognition {
    pub fn in_c(&self) -> bool {
        self.components.iter().all(|c| c.result.is_ok())
    }

    /// First rejection, if any.
    pub fn rejection(&self) -> Option<&NotInC> {
        self.components.iter().find_map(|c| c.result.as_ref().err())
    }

    /// `{"in_c": .., "components": [{"nodes", "in_c", "rejection"}]}`, with
    /// `rejection` null for accepted components.
    pub fn to_json(&self) -> Value {
        let components: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                json!({
                    "nodes": c.nodes,
                    "in_c": c.result.is_ok(),
                    "rejection": c.result.as_ref().err(),
                })
            })
            .collect();
        json!({ "in_c": self.in_c(), "components": components })
    }
}

/// Decides membership in C component by component.
///
/// A graph is in C exactly when each of its biconnected components is, so
/// those are decomposed separately and their trees are not kept; use
/// [`build_proper_tree`] for the tree itself.
pub fn recognize(g: &Graph) -> Recognition {
    let components = g.connected_components();
    let mut comp_of = vec![0usize; g.node_count()];
    for (i, c) in components.iter().enumerate() {
        for v in c {
            comp_of[v] = i;
        }
    }
    let mut results: Vec<Result<(), NotInC>> = vec![Ok(()); components.len()];
    for block in g.biconnected_node_sets() {
        let c = comp_of[block.as_slice()[0]];
        if block.len() < 3 || results[c].is_err() {
            continue;
        }
        let (sub, back) = g.induced_unchecked(block.as_slice());
        let rep = back.into_iter().map(Some).collect();
        if let Err(v) = decompose(sub, rep, false) {
            results[c] = Err(v);
        }
    }
    let components = components
        .into_iter()
        .zip(results)
        .map(|(nodes, result)| ComponentVerdict { nodes, result })
        .collect();
    Recognition { components }
}

/// Whether `g` contains no cycle with a unique chord.
pub fn is_in_c(g: &Graph) -> bool {
    g.biconnected_node_sets().into_iter().filter(|b| b.len() >= 3).all(|block| {
        let (sub, _) = g.induced_unchecked(block.as_slice());
        let n = sub.node_count();
        decompose(sub, vec![None; n], false).is_ok()
    })
}
