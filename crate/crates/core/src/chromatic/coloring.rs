use std::collections::VecDeque;

use super::{third_color_observed, AdmissiblePair, ColorError, Coloring, ThirdColorEvent};
use crate::decomp::{build_proper_tree, recognize};
use crate::graph::{Graph, NodeSet};

/// Optimal coloring of a graph in C.
///
/// Every biconnected component is a clique, bipartite, or 3-colored from
/// a third color; the component colorings are then merged along the
/// block-cut tree by swapping two colors so cut vertices agree.
pub fn optimal_coloring(g: &Graph) -> Result<Coloring, ColorError> {
    optimal_coloring_observed(g, &mut |_| {})
}

/// [`optimal_coloring`], reporting every third color computed on the way.
pub fn optimal_coloring_observed(
    g: &Graph,
    observer: &mut dyn FnMut(ThirdColorEvent<'_>),
) -> Result<Coloring, ColorError> {
    if let Some(v) = recognize(g).rejection() {
        return Err(ColorError::NotInC(v.clone()));
    }
    let n = g.node_count();
    let blocks = g.biconnected_node_sets();
    let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for v in b {
            blocks_of[v].push(i);
        }
    }
    let mut color = vec![0usize; n];
    let mut num_colors = usize::from(n > 0);
    let mut done = vec![false; blocks.len()];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root] != 0 {
            continue;
        }
        let Some(&first) = blocks_of[root].first() else {
            color[root] = 1;
            continue;
        };
        queue.push_back(first);
        while let Some(bi) = queue.pop_front() {
            if std::mem::replace(&mut done[bi], true) {
                continue;
            }
            let nodes = blocks[bi].as_slice();
            let (local, k) = color_block(g, nodes, observer)?;
            // At most one node of a new block is colored already.
            let swap = nodes
                .iter()
                .position(|&v| color[v] != 0)
                .map(|i| (local[i], color[nodes[i]]));
            let relabel = |c: usize| match swap {
                Some((l, gc)) if c == l => gc,
                Some((l, gc)) if c == gc => l,
                _ => c,
            };
            for (i, &v) in nodes.iter().enumerate() {
                let c = relabel(local[i]);
                debug_assert!(color[v] == 0 || color[v] == c);
                color[v] = c;
                num_colors = num_colors.max(c);
                queue.extend(blocks_of[v].iter().copied().filter(|&b| !done[b]));
            }
            num_colors = num_colors.max(k);
        }
    }
    Ok(Coloring { color, num_colors })
}

/// Coloring of the biconnected component on `nodes` with colors `1..=k`.
fn color_block(
    g: &Graph,
    nodes: &[usize],
    observer: &mut dyn FnMut(ThirdColorEvent<'_>),
) -> Result<(Vec<usize>, usize), ColorError> {
    let (h, _) = g.induced_subgraph(&NodeSet::from_sorted_unchecked(nodes.to_vec()))?;
    let k = h.node_count();
    if h.is_clique() {
        return Ok(((1..=k).collect(), k));
    }
    if let Some(side) = h.two_coloring() {
        return Ok((side.iter().map(|&s| usize::from(s) + 1).collect(), 2));
    }
    let tree = build_proper_tree(&h)
        .map_err(|e| ColorError::Precondition(e.to_string()))?
        .map_err(ColorError::NotInC)?;
    let pair = AdmissiblePair::new(&h, 0, 2, None)?;
    let tc = third_color_observed(&tree, 0, &pair, observer)?;
    let rest: Vec<usize> = h.nodes().filter(|&v| !tc.s.contains(v)).collect();
    let (r, back) = h.induced_subgraph(&NodeSet::from_sorted_unchecked(rest))?;
    let side = r
        .two_coloring()
        .ok_or_else(|| ColorError::Precondition("third color leaves an odd cycle".into()))?;
    let mut local = vec![3; k];
    for (i, &v) in back.iter().enumerate() {
        local[v] = usize::from(side[i]) + 1;
    }
    Ok((local, 3))
}

/// Maximum clique of a graph in C: its largest biconnected component that
/// is a clique, or any edge, or any node.
pub fn max_clique(g: &Graph) -> NodeSet {
    let mut best = NodeSet::new();
    for comp in g.biconnected_components() {
        let nodes: NodeSet = comp.iter().flat_map(|&(u, v)| [u, v]).collect();
        let k = nodes.len();
        if comp.len() == k * (k - 1) / 2 && k > best.len() {
            best = nodes;
        }
    }
    if best.is_empty() && g.node_count() > 0 {
        best = match g.edges().next() {
            Some((u, v)) => [u, v].into(),
            None => NodeSet::singleton(0),
        };
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::{make_heawood, make_no_transversal_fixture, make_petersen, two_subdivision};
    use crate::graph::named::*;

    fn assert_proper(g: &Graph, c: &Coloring) {
        assert!(g.edges().all(|(u, v)| c.color[u] != c.color[v]));
        assert!(c.color.iter().all(|&x| (1..=c.num_colors).contains(&x)));
        for k in 1..=c.num_colors {
            assert!(c.color.contains(&k), "color {k} unused");
        }
    }

    #[test]
    fn examples() {
        for (g, k) in [
            (complete(4), 4),
            (make_petersen(), 3),
            (make_heawood(), 2),
            (bowtie(), 3),
            (cycle(7), 3),
            (make_no_transversal_fixture(), 3),
            (Graph::empty(3), 1),
            (Graph::empty(0), 0),
        ] {
            let c = optimal_coloring(&g).unwrap();
            assert_eq!(c.num_colors, k, "{g:?}");
            assert_proper(&g, &c);
        }
    }

    #[test]
    fn cliques_glued_to_odd_cycles() {
        let mut edges: Vec<(usize, usize)> = complete(5).edges().collect();
        edges.extend([(4, 5), (5, 6), (6, 7), (7, 8), (8, 4), (8, 9), (9, 10), (10, 8)]);
        let g = Graph::from_edges(11, edges).unwrap();
        let c = optimal_coloring(&g).unwrap();
        assert_eq!(c.num_colors, 5);
        assert_proper(&g, &c);
    }

    #[test]
    fn refuses_graphs_outside_c() {
        assert!(matches!(optimal_coloring(&diamond()), Err(ColorError::NotInC(_))));
    }

    #[test]
    fn cliques() {
        assert_eq!(max_clique(&make_petersen()).len(), 2);
        assert_eq!(max_clique(&bowtie()).len(), 3);
        let mut edges: Vec<(usize, usize)> = complete(5).edges().collect();
        edges.extend([(4, 5), (5, 6), (6, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        assert_eq!(max_clique(&g), (0..5).collect());
        assert_eq!(max_clique(&Graph::empty(2)).as_slice(), &[0]);
        assert!(max_clique(&Graph::empty(0)).is_empty());
        assert_eq!(max_clique(&two_subdivision(&complete(6))).len(), 2);
    }
}
