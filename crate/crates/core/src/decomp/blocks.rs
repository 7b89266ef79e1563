use serde::{Deserialize, Serialize};

use super::{DecompError, Split};
use crate::graph::{Graph, NodeSet};

/// Which blocks to build for a proper 2-cutset: always a fresh marker, or
/// a real node `c` with `N(c) = {a, b}` when one exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockMode {
    Structural,
    Proper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Marker {
    /// Id of the marker in the block.
    pub node: usize,
    /// Whether the marker is a node of the parent graph.
    pub is_real: bool,
}

/// One block of decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    /// Parent id of every block node; `None` for a fresh marker.
    pub to_parent: Vec<Option<usize>>,
    pub marker: Option<Marker>,
}

/// Blocks `(G_X, G_Y)` of `g` with respect to `split`. Block nodes keep the
/// relative order of their parent ids; a fresh marker comes last.
pub fn blocks(g: &Graph, split: &Split, mode: BlockMode) -> Result<(Block, Block), DecompError> {
    split.check(g).map_err(DecompError::InvalidSplit)?;
    Ok(blocks_unchecked(g, split, mode))
}

pub(crate) fn blocks_unchecked(g: &Graph, split: &Split, mode: BlockMode) -> (Block, Block) {
    match split {
        Split::OneCutset { x, y, v } => {
            let side = |s: &NodeSet| {
                let mut keep = s.clone();
                keep.insert(*v);
                build(g, &keep, None)
            };
            (side(x), side(y))
        }
        Split::ProperOneJoin { x, y, a, b } => {
            (build(g, x, Some(a)), build(g, y, Some(b)))
        }
        Split::ProperTwoCutset { x, y, a, b } => {
            let real = match mode {
                BlockMode::Structural => None,
                BlockMode::Proper => g
                    .neighbors(*a)
                    .iter()
                    .copied()
                    .find(|&c| g.neighbors(c) == [(*a).min(*b), (*a).max(*b)]),
            };
            let ab: NodeSet = [*a, *b].into();
            let side = |s: &NodeSet| match real {
                Some(c) => {
                    let mut keep = s.union(&ab);
                    keep.insert(c);
                    let mut block = build(g, &keep, None);
                    let node = keep.as_slice().binary_search(&c).expect("marker kept");
                    block.marker = Some(Marker { node, is_real: true });
                    block
                }
                None => build(g, &s.union(&ab), Some(&ab)),
            };
            (side(x), side(y))
        }
    }
}

/// `G[keep]`, plus a fresh node adjacent to `attach` when given.
fn build(g: &Graph, keep: &NodeSet, attach: Option<&NodeSet>) -> Block {
    let (sub, back) = g.induced_unchecked(keep.as_slice());
    let mut to_parent: Vec<Option<usize>> = back.into_iter().map(Some).collect();
    let Some(attach) = attach else {
        return Block { graph: sub, to_parent, marker: None };
    };
    let m = sub.node_count();
    let mut adj = sub.to_adjacency();
    let mut fresh = Vec::with_capacity(attach.len());
    for p in attach {
        let local = keep.as_slice().binary_search(&p).expect("attachments lie in the block");
        adj[local].push(m);
        fresh.push(local);
    }
    adj.push(fresh);
    to_parent.push(None);
    Block {
        graph: Graph::from_raw_adjacency(adj),
        to_parent,
        marker: Some(Marker { node: m, is_real: false }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::find_1join;
    use crate::graph::named::*;

    #[test]
    fn theta_proper_blocks() {
        // Ends 0, 1; paths 0-2-3-1, 0-4-5-1, 0-6-7-1.
        let g = theta(&[3, 3, 3]);
        let split = Split::ProperTwoCutset { x: [2, 3].into(), y: [4, 5, 6, 7].into(), a: 0, b: 1 };
        let (bx, by) = blocks(&g, &split, BlockMode::Proper).unwrap();
        assert_eq!(bx.graph.node_count(), 5);
        assert!(bx.graph.nodes().all(|v| bx.graph.degree(v) == 2) && bx.graph.is_connected());
        assert_eq!(bx.marker, Some(Marker { node: 4, is_real: false }));
        assert_eq!(bx.to_parent, vec![Some(0), Some(1), Some(2), Some(3), None]);
        // Two 3-paths between 0 and 1 plus the marker path 0-c-1.
        assert_eq!(by.graph.node_count(), 7);
        assert_eq!(by.graph.edge_count(), 8);
        assert_eq!(by.graph.neighbors(6), &[0, 1]);
        assert_eq!(by.graph.degree(0), 3);
    }

    #[test]
    fn real_marker_is_shared() {
        // Ends 0, 1; paths 0-2-1 (the real marker), 0-3-4-1, 0-5-6-1.
        let g = theta(&[2, 3, 3]);
        let split = Split::ProperTwoCutset { x: [3, 4].into(), y: [2, 5, 6].into(), a: 0, b: 1 };
        let (bx, by) = blocks(&g, &split, BlockMode::Proper).unwrap();
        assert_eq!(bx.marker, Some(Marker { node: 2, is_real: true }));
        assert_eq!(bx.to_parent, vec![Some(0), Some(1), Some(2), Some(3), Some(4)]);
        assert_eq!(by.marker, Some(Marker { node: 2, is_real: true }));
        assert_eq!(by.graph.node_count(), 5);
        let (sx, _) = blocks(&g, &split, BlockMode::Structural).unwrap();
        assert_eq!(sx.marker, Some(Marker { node: 4, is_real: false }));
    }

    #[test]
    fn square_join_blocks_are_paths() {
        let c4 = cycle(4);
        let j = find_1join(&c4).unwrap();
        let split = Split::ProperOneJoin { x: j.x, y: j.y, a: j.a, b: j.b };
        let (bx, by) = blocks(&c4, &split, BlockMode::Proper).unwrap();
        for b in [bx, by] {
            assert_eq!((b.graph.node_count(), b.graph.edge_count()), (3, 2));
            assert_eq!(b.graph.degree(2), 2);
        }
    }

    #[test]
    fn bowtie_cutset_blocks_are_triangles() {
        let split = Split::OneCutset { x: [0, 1].into(), y: [3, 4].into(), v: 2 };
        let (bx, by) = blocks(&bowtie(), &split, BlockMode::Proper).unwrap();
        assert!(bx.graph.is_clique() && by.graph.is_clique());
        assert_eq!(bx.graph.node_count(), 3);
        assert_eq!(by.to_parent, vec![Some(2), Some(3), Some(4)]);
    }

    #[test]
    fn invalid_split_is_rejected() {
        let split = Split::OneCutset { x: [0].into(), y: [2, 3, 4].into(), v: 1 };
        assert!(matches!(blocks(&cycle(5), &split, BlockMode::Proper), Err(DecompError::InvalidSplit(_))));
    }
}
