use super::basic::classify_connected;
use super::join::{find_1join, properness};
use super::{DecompError, NotInC, RejectStep, Split, Witness};
use crate::graph::{Graph, NodeSet};

/// 1-cutset split at the smallest cut vertex `v`. `X` is the component of
/// `G - v` holding the smallest node; `Y` is everything else.
pub fn find_1cutset(g: &Graph) -> Result<Option<Split>, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    Ok(one_cutset_unchecked(g))
}

pub(crate) fn one_cutset_unchecked(g: &Graph) -> Option<Split> {
    let v = g.first_articulation_point()?;
    let mut comps = g.components_avoiding(&[v]).into_iter();
    let x = comps.next().expect("a cut vertex leaves two components");
    let y = comps.fold(NodeSet::new(), |acc, c| acc.union(&c));
    Some(Split::OneCutset { x, y, v })
}

/// Lexicographically smallest pair `(a, b)`, `a < b`, whose removal
/// disconnects `g`. Runs an articulation point search in `G - a` for each
/// `a`, so `O(n·(n + m))`.
pub fn find_2cutset(g: &Graph) -> Option<(usize, usize)> {
    let n = g.node_count();
    if n < 4 {
        return None;
    }
    for a in g.nodes() {
        if let Some(b) = g.articulation_points_skipping(Some(a)).iter().find(|&b| b > a) {
            return Some((a, b));
        }
        if g.components_avoiding(&[a]).len() > 1 {
            // `a` alone separates; pair it with the first node that keeps
            // the remainder disconnected.
            if let Some(b) = (a + 1..n).find(|&b| g.components_avoiding(&[a, b]).len() > 1) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Proper 2-cutset of a connected graph with no 1-cutset and no proper
/// 1-join that is not basic, or a proof step showing `g` is not in C.
pub fn find_proper_2cutset(g: &Graph) -> Result<Result<Split, NotInC>, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    if let Some(v) = g.first_articulation_point() {
        return Err(DecompError::HasOneCutset(v));
    }
    if classify_connected(g).is_some() {
        return Err(DecompError::Basic);
    }
    if let Some(join) = find_1join(g) {
        if join.a.len() >= 2 && join.b.len() >= 2 && properness(g, &join).is_ok() {
            return Err(DecompError::HasProperOneJoin);
        }
    }
    Ok(proper_2cutset_unchecked(g))
}

/// Components of the subgraph induced by degree-2 nodes, each with its two
/// attachments. Under the input contract every component is a path
/// attached to two distinct nodes.
fn degree_two_paths(g: &Graph) -> Vec<(Vec<usize>, usize, usize)> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in g.nodes() {
        if seen[s] || g.degree(s) != 2 {
            continue;
        }
        seen[s] = true;
        let mut path = vec![s];
        let mut attach = Vec::new();
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if g.degree(w) == 2 {
                    if !seen[w] {
                        seen[w] = true;
                        path.push(w);
                        stack.push(w);
                    }
                } else if !attach.contains(&w) {
                    attach.push(w);
                }
            }
        }
        assert!(
            attach.len() == 2,
            "degree-2 component with {} attachments violates the input contract",
            attach.len()
        );
        path.sort_unstable();
        let (a, b) = (attach[0].min(attach[1]), attach[0].max(attach[1]));
        out.push((path, a, b));
    }
    out
}

pub(crate) fn proper_2cutset_unchecked(g: &Graph) -> Result<Split, NotInC> {
    let paths = degree_two_paths(g);
    if let Some((path, a, b)) = paths.iter().find(|(_, a, b)| g.has_edge(*a, *b)) {
        return Err(NotInC {
            step: RejectStep::AdjacentAttachments,
            witness: Some(Witness::AttachedPath { a: *a, b: *b, path: path.clone() }),
        });
    }
    if let Some((path, a, b)) = paths.iter().find(|(p, _, _)| p.len() >= 2) {
        let x: NodeSet = path.iter().copied().collect();
        let y = g.nodes().filter(|&v| v != *a && v != *b && !x.contains(v)).collect();
        return Ok(Split::ProperTwoCutset { x, y, a: *a, b: *b });
    }

    // Contract each isolated degree-2 node into an edge between its
    // attachments.
    let keep: Vec<usize> = g.nodes().filter(|&v| g.degree(v) != 2).collect();
    let (core, back) = g.induced_unchecked(&keep);
    let mut local = vec![usize::MAX; g.node_count()];
    for (i, &v) in back.iter().enumerate() {
        local[v] = i;
    }
    let extra = paths.iter().map(|(_, a, b)| (local[*a], local[*b]));
    let contracted = Graph::from_valid_edges(core.node_count(), core.edges().chain(extra));

    let Some((ca, cb)) = find_2cutset(&contracted) else {
        return Err(NotInC { step: RejectStep::NoTwoCutset, witness: None });
    };
    let (a, b) = (back[ca], back[cb]);
    if g.has_edge(a, b) {
        return Err(NotInC {
            step: RejectStep::AdjacentTwoCutset,
            witness: Some(Witness::AdjacentCutset { a, b }),
        });
    }
    let comps = g.components_avoiding(&[a, b]);
    let mut x = NodeSet::new();
    let mut rest = comps.into_iter();
    for c in rest.by_ref() {
        x = x.union(&c);
        if x.len() >= 2 {
            break;
        }
    }
    let y = rest.fold(NodeSet::new(), |acc, c| acc.union(&c));
    Ok(Split::ProperTwoCutset { x, y, a, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::make_petersen;
    use crate::graph::named::*;

    #[test]
    fn one_cutset_examples() {
        let s = find_1cutset(&bowtie()).unwrap().unwrap();
        assert_eq!(s, Split::OneCutset { x: [0, 1].into(), y: [3, 4].into(), v: 2 });
        assert!(find_1cutset(&make_petersen()).unwrap().is_none());
        let p = find_1cutset(&path(3)).unwrap().unwrap();
        assert_eq!(p, Split::OneCutset { x: [0].into(), y: [2].into(), v: 1 });
        assert!(find_1cutset(&Graph::empty(2)).is_err());
        assert!(find_1cutset(&complete(2)).unwrap().is_none());
    }

    #[test]
    fn two_cutset_examples() {
        assert_eq!(find_2cutset(&cycle(5)), Some((0, 2)));
        assert_eq!(find_2cutset(&make_petersen()), None);
        assert_eq!(find_2cutset(&complete(4)), None);
        assert_eq!(find_2cutset(&theta(&[3, 3, 3])), Some((0, 1)));
    }

    #[test]
    fn two_cutset_matches_pair_scan() {
        let graphs = [cycle(6), theta(&[2, 3, 4]), make_petersen(), complete_bipartite(3, 3)];
        for g in graphs {
            let n = g.node_count();
            let brute = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .find(|&(a, b)| g.components_avoiding(&[a, b]).len() > 1);
            assert_eq!(find_2cutset(&g), brute, "{g:?}");
        }
    }

    #[test]
    fn theta_splits_on_a_long_path() {
        // Three paths of length 3 embed in the Heawood graph.
        assert_eq!(find_proper_2cutset(&theta(&[3, 3, 3])), Err(DecompError::Basic));
        let g = theta(&[3, 3, 3, 3]);
        let s = find_proper_2cutset(&g).unwrap().unwrap();
        assert_eq!(s, Split::ProperTwoCutset { x: [2, 3].into(), y: (4..10).collect(), a: 0, b: 1 });
        assert!(s.check(&g).is_ok());
    }

    #[test]
    fn edge_plus_two_long_paths_is_rejected_in_step_one() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap();
        let v = find_proper_2cutset(&g).unwrap().unwrap_err();
        assert_eq!(v.step, RejectStep::AdjacentAttachments);
        assert_eq!(v.witness, Some(Witness::AttachedPath { a: 0, b: 1, path: vec![2, 3] }));
    }

    #[test]
    fn subdivided_petersen_is_rejected_in_step_three() {
        let p = make_petersen();
        let mut edges: Vec<_> = p.edges().filter(|&e| e != (0, 1)).collect();
        edges.extend([(0, 10), (10, 1)]);
        let g = Graph::from_edges(11, edges).unwrap();
        let v = find_proper_2cutset(&g).unwrap().unwrap_err();
        assert_eq!(v.step, RejectStep::NoTwoCutset);
    }

    #[test]
    fn preconditions_are_reported() {
        assert_eq!(find_proper_2cutset(&bowtie()), Err(DecompError::HasOneCutset(2)));
        assert_eq!(find_proper_2cutset(&cycle(7)), Err(DecompError::Basic));
        assert_eq!(find_proper_2cutset(&cycle(4)), Err(DecompError::HasProperOneJoin));
        assert_eq!(find_proper_2cutset(&Graph::empty(3)), Err(DecompError::Disconnected));
    }
}
