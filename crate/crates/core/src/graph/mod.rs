//! Simple undirected graphs over dense node ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted so
//! adjacency tests are a binary search and every traversal is deterministic.

mod connectivity;
mod cycles;
mod io;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use io::parse_edge_list;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("node id {id} out of range for a graph on {n} nodes")]
    OutOfRange { id: usize, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
}

/// Ordered set of node ids without duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeSet(Vec<usize>);

impl NodeSet {
    pub fn new() -> Self {
        NodeSet(Vec::new())
    }

    pub fn from_sorted_unchecked(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        NodeSet(v)
    }

    pub fn singleton(v: usize) -> Self {
        NodeSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        NodeSet(v)
    }
}

impl From<Vec<usize>> for NodeSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for NodeSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a NodeSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Simple undirected graph on nodes `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` isolated nodes.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::OutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Builds from neighbor lists that are known to be loop-free and in range.
    /// Lists need not be sorted or symmetric-deduplicated.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        debug_assert!(twice % 2 == 0, "asymmetric adjacency");
        Graph { adj, m: twice / 2 }
    }

    /// Infallible edge-list constructor for internal callers holding valid ids.
    pub(crate) fn from_valid_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        Self::from_raw_adjacency(adj)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N(v)` as a node set.
    pub fn neighborhood(&self, v: usize) -> NodeSet {
        NodeSet::from_sorted_unchecked(self.adj[v].clone())
    }

    /// `N[v] = {v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> NodeSet {
        let mut s = self.neighborhood(v);
        s.insert(v);
        s
    }

    pub fn check_node(&self, v: usize) -> Result<(), GraphError> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                id: v,
                n: self.node_count(),
            })
        }
    }

    pub fn is_clique(&self) -> bool {
        let n = self.node_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// True when no two members of `s` are adjacent.
    pub fn is_stable(&self, s: &NodeSet) -> bool {
        s.iter()
            .all(|u| self.adj[u].iter().all(|&v| !s.contains(v)))
    }

    /// `G[s]` plus the table mapping new ids to original ids.
    pub fn induced_subgraph(&self, s: &NodeSet) -> Result<(Graph, Vec<usize>), GraphError> {
        for v in s {
            self.check_node(v)?;
        }
        Ok(self.induced_unchecked(s.as_slice()))
    }

    /// Induced subgraph on the (sorted, deduplicated, in-range) ids in `keep`.
    pub(crate) fn induced_unchecked(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.node_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect::<Vec<_>>()
            })
            .collect();
        (Graph::from_raw_adjacency(adj), keep.to_vec())
    }

    /// Copy of the neighbor lists, for building modified graphs.
    pub(crate) fn to_adjacency(&self) -> Vec<Vec<usize>> {
        self.adj.clone()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.node_count())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Small fixed graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_valid_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 nodes");
        Graph::from_valid_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_valid_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        Graph::from_valid_edges(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
    }

    /// Two triangles sharing node 2.
    pub fn bowtie() -> Graph {
        Graph::from_valid_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    }

    /// The 4-cycle 0-1-2-3 with chord 0-2.
    pub fn diamond() -> Graph {
        Graph::from_valid_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    }

    /// Nodes 0 and 1 joined by internally disjoint paths of the given lengths
    /// (edge counts). A length-1 path is the edge 0-1.
    pub fn theta(lengths: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in lengths {
            assert!(len >= 1);
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_valid_edges(next, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::OutOfRange { id: 2, n: 2 })
        ));
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let c5 = cycle(5);
        let (p, map) = c5.induced_subgraph(&NodeSet::from([1, 2, 3])).unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_empty_and_out_of_range() {
        let (e, map) = complete(4).induced_subgraph(&NodeSet::new()).unwrap();
        assert_eq!(e.node_count(), 0);
        assert!(map.is_empty());
        assert!(complete(3).induced_subgraph(&NodeSet::from([5])).is_err());
    }

    #[test]
    fn theta_shape() {
        let t = theta(&[3, 3, 3]);
        assert_eq!(t.node_count(), 8);
        assert_eq!(t.edge_count(), 9);
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.degree(1), 3);
    }

    #[test]
    fn node_set_ops() {
        let a = NodeSet::from([3, 1, 2, 3]);
        let b = NodeSet::from([2, 5]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 5]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 3]);
        assert!(NodeSet::from([2]).is_subset(&a));
    }
}
