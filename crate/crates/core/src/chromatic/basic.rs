use std::sync::OnceLock;

use super::{check_pair, is_forest_without, AdmissiblePair, ColorError, ThirdColor};
use crate::compose::petersen_ids::{a, b};
use crate::decomp::{classify_basic, is_induced_subgraph_of_fixed, BasicKind, FixedGraph};
use crate::embed::automorphisms;
use crate::graph::{Graph, NodeSet};

fn petersen_automorphisms() -> &'static [Vec<usize>] {
    static AUT: OnceLock<Vec<Vec<usize>>> = OnceLock::new();
    AUT.get_or_init(|| automorphisms(FixedGraph::Petersen.graph()))
}

/// Strong third color `S` of a triangle-free basic graph other than the
/// Petersen graph with `T ⊆ S` and `S ∩ R = ∅`.
pub fn strong_third_color_basic(g: &Graph, pair: &AdmissiblePair) -> Result<ThirdColor, ColorError> {
    check_pair(g, pair)?;
    let kind = classify_basic(g)
        .map_err(|e| ColorError::Precondition(e.to_string()))?
        .ok_or_else(|| ColorError::Precondition("graph is not basic".into()))?;
    if g.find_triangle().is_some() {
        return Err(ColorError::Precondition("graph has a triangle".into()));
    }
    Ok(ThirdColor { s: strong_basic(g, &kind, pair)?, strong: true })
}

pub(crate) fn strong_basic(g: &Graph, kind: &BasicKind, pair: &AdmissiblePair) -> Result<NodeSet, ColorError> {
    match kind {
        BasicKind::Clique { size } if *size > 2 => {
            Err(ColorError::Precondition(format!("clique of size {size} has a triangle")))
        }
        BasicKind::LongHole { .. } => {
            // Any nonempty stable set breaks the only cycle.
            if !pair.t.is_empty() {
                return Ok(pair.t.clone());
            }
            let v = g.nodes().find(|&v| !pair.r.contains(v)).expect("R never covers a long hole");
            Ok(NodeSet::singleton(v))
        }
        BasicKind::Clique { .. } | BasicKind::Strongly2Bipartite { .. } | BasicKind::HeawoodSub { .. } => {
            bipartite_side(g, pair)
        }
        BasicKind::PetersenSub { embedding } if embedding.len() == 10 => Err(ColorError::Precondition(
            "the Petersen graph needs a weak third color".into(),
        )),
        BasicKind::PetersenSub { embedding } => petersen_q_set(g, embedding, pair),
    }
}

/// The side `A` of the bipartition with `T ⊆ A` and `|A ∩ R| ≤ 2`, minus
/// `R`. Every cycle left has at most two nodes of `A`, so it would be a
/// square.
fn bipartite_side(g: &Graph, pair: &AdmissiblePair) -> Result<NodeSet, ColorError> {
    let side = g
        .two_coloring()
        .ok_or_else(|| ColorError::Precondition("graph is not bipartite".into()))?;
    for c in [0u8, 1] {
        let inside = |v: usize| side[v] == c;
        if pair.t.iter().all(inside) && pair.r.iter().filter(|&v| inside(v)).count() <= 2 {
            return Ok(g.nodes().filter(|&v| inside(v) && !pair.r.contains(v)).collect());
        }
    }
    Err(ColorError::Precondition("no side fits the pair".into()))
}

/// Petersen node sets whose trace on a proper induced subgraph answers a
/// pair of each case, up to automorphism.
fn q_sets(case: u8) -> Vec<Vec<usize>> {
    match case {
        1 => vec![vec![a(2), a(5), b(1)], vec![a(2), a(5), b(1), a(4)]],
        2 => vec![vec![a(3), b(3), b(5)]],
        3 => vec![vec![a(2), b(3)]],
        4 => vec![vec![a(2), b(2), b(5)]],
        _ => vec![vec![b(1), a(3), b(4)]],
    }
}

fn petersen_q_set(g: &Graph, embedding: &[usize], pair: &AdmissiblePair) -> Result<NodeSet, ColorError> {
    for q in q_sets(pair.case) {
        for sigma in petersen_automorphisms() {
            let s: NodeSet = g.nodes().filter(|&i| q.contains(&sigma[embedding[i]])).collect();
            if pair.t.is_subset(&s) && pair.r.is_disjoint(&s) && g.is_stable(&s) && is_forest_without(g, &s) {
                return Ok(s);
            }
        }
    }
    Err(ColorError::Precondition("no Petersen set fits the pair".into()))
}

/// Third color of the Petersen graph (under any labeling) with `T ⊆ S` and
/// `S ∩ R = ∅`. It is strong except for pairs of case 1, where `G − S` is a
/// 6-cycle plus an isolated node.
pub fn third_color_petersen(g: &Graph, pair: &AdmissiblePair) -> Result<ThirdColor, ColorError> {
    check_pair(g, pair)?;
    let embedding = (g.node_count() == 10)
        .then(|| is_induced_subgraph_of_fixed(g, FixedGraph::Petersen))
        .flatten()
        .ok_or_else(|| ColorError::Precondition("graph is not the Petersen graph".into()))?;
    petersen_weak(g, &embedding, pair)
}

pub(crate) fn petersen_weak(g: &Graph, embedding: &[usize], pair: &AdmissiblePair) -> Result<ThirdColor, ColorError> {
    match pair.case {
        1 => Ok(ThirdColor { s: pair.t.clone(), strong: false }),
        2 => {
            let sigma = petersen_automorphisms()
                .iter()
                .find(|sigma| sigma[embedding[pair.center]] == a(1))
                .expect("the Petersen graph is vertex-transitive");
            let q = [a(3), b(3), b(5)];
            let s = g.nodes().filter(|&i| q.contains(&sigma[embedding[i]])).collect();
            Ok(ThirdColor { s, strong: true })
        }
        c => Err(ColorError::NotAdmissible(format!("case {c} needs a node of degree two"))),
    }
}
