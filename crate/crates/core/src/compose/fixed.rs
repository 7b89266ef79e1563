use crate::graph::Graph;

/// Petersen node ids: `a1..a5` are `0..5`, `b1..b5` are `5..10`.
pub mod petersen_ids {
    pub const fn a(i: usize) -> usize {
        i - 1
    }
    pub const fn b(i: usize) -> usize {
        i + 4
    }
}

/// The Petersen graph. The `a` and `b` nodes each induce a 5-cycle in
/// natural order; the cross edges are `a1b1, a2b4, a3b2, a4b5, a5b3`.
pub fn make_petersen() -> Graph {
    use petersen_ids::{a, b};
    let mut edges = Vec::with_capacity(15);
    for i in 1..=5 {
        let j = i % 5 + 1;
        edges.push((a(i), a(j)));
        edges.push((b(i), b(j)));
    }
    for (i, j) in [(1, 1), (2, 4), (3, 2), (4, 5), (5, 3)] {
        edges.push((a(i), b(j)));
    }
    Graph::from_valid_edges(10, edges)
}

/// The Heawood graph on `a1..a14` (ids `0..14`): the Hamiltonian cycle in
/// natural order plus `a1a10, a2a7, a3a12, a4a9, a5a14, a6a11, a8a13`.
pub fn make_heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for (i, j) in [(1, 10), (2, 7), (3, 12), (4, 9), (5, 14), (6, 11), (8, 13)] {
        edges.push((i - 1, j - 1));
    }
    Graph::from_valid_edges(14, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_shape() {
        let p = make_petersen();
        assert_eq!((p.node_count(), p.edge_count()), (10, 15));
        assert!(p.nodes().all(|v| p.degree(v) == 3));
        assert_eq!(p.girth(), Some(5));
    }

    #[test]
    fn heawood_shape() {
        let h = make_heawood();
        assert_eq!((h.node_count(), h.edge_count()), (14, 21));
        assert!(h.nodes().all(|v| h.degree(v) == 3));
        assert_eq!(h.girth(), Some(6));
        let (a, b) = h.bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (7, 7));
    }

    #[test]
    fn petersen_a_and_b_induce_c5() {
        use crate::graph::NodeSet;
        let p = make_petersen();
        for part in [NodeSet::from([0, 1, 2, 3, 4]), NodeSet::from([5, 6, 7, 8, 9])] {
            let (sub, _) = p.induced_subgraph(&part).unwrap();
            assert_eq!(sub.edge_count(), 5);
            assert!(sub.nodes().all(|v| sub.degree(v) == 2));
            assert!(sub.is_connected());
        }
    }
}
