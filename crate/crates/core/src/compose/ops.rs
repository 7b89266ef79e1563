//! Composition operations that invert the decompositions.
//!
//! Output layout, shared by every operation: the surviving nodes of `g1` in
//! increasing order, then the surviving nodes of `g2` in increasing order,
//! then any newly created nodes.

use thiserror::Error;

use crate::graph::{Graph, GraphError, NodeSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("neighborhood of node {node} in graph {graph} is not a stable set")]
    NeighborhoodNotStable { graph: u8, node: usize },
    #[error("neighborhood of node {node} in graph {graph} has fewer than two nodes")]
    NeighborhoodTooSmall { graph: u8, node: usize },
    #[error("node {node} in graph {graph} does not have degree two")]
    NotDegreeTwo { graph: u8, node: usize },
    #[error("node {node} in graph {graph} is a 1-cutset")]
    CutVertex { graph: u8, node: usize },
    #[error("the two neighbors of node {node} in graph {graph} are adjacent")]
    NeighborsAdjacent { graph: u8, node: usize },
    #[error("degree condition fails on attachment pair {pair}: {sum} < 3")]
    DegreeSum { pair: u8, sum: usize },
}

/// Result of gluing: the graph plus where each input node went.
#[derive(Debug, Clone)]
pub struct Glued {
    pub graph: Graph,
    pub map1: Vec<Option<usize>>,
    pub map2: Vec<Option<usize>>,
    /// Ids of nodes created by the operation.
    pub created: Vec<usize>,
}

struct Layout {
    map1: Vec<Option<usize>>,
    map2: Vec<Option<usize>>,
    next: usize,
}

fn layout(g1: &Graph, drop1: &[usize], g2: &Graph, drop2: &[usize]) -> Layout {
    let mut next = 0;
    let mut assign = |g: &Graph, drop: &[usize]| {
        g.nodes()
            .map(|v| {
                (!drop.contains(&v)).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect::<Vec<_>>()
    };
    let map1 = assign(g1, drop1);
    let map2 = assign(g2, drop2);
    Layout { map1, map2, next }
}

fn carried_edges<'a>(
    g: &'a Graph,
    map: &'a [Option<usize>],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    g.edges()
        .filter_map(move |(u, v)| Some((map[u]?, map[v]?)))
}

/// `O₀`: disjoint union; ids of `g2` are shifted by `|V(g1)|`.
pub fn op0_union(g1: &Graph, g2: &Graph) -> Graph {
    glue0(g1, g2).graph
}

pub fn glue0(g1: &Graph, g2: &Graph) -> Glued {
    let l = layout(g1, &[], g2, &[]);
    let edges: Vec<_> = carried_edges(g1, &l.map1)
        .chain(carried_edges(g2, &l.map2))
        .collect();
    Glued {
        graph: Graph::from_valid_edges(l.next, edges),
        map1: l.map1,
        map2: l.map2,
        created: Vec::new(),
    }
}

/// `O₁`: delete `u` and `w`, add a node adjacent to `N_{g1}(u) ∪ N_{g2}(w)`.
pub fn op1_glue(g1: &Graph, u: usize, g2: &Graph, w: usize) -> Result<Graph, ComposeError> {
    glue1(g1, u, g2, w).map(|g| g.graph)
}

pub fn glue1(g1: &Graph, u: usize, g2: &Graph, w: usize) -> Result<Glued, ComposeError> {
    g1.check_node(u)?;
    g2.check_node(w)?;
    let l = layout(g1, &[u], g2, &[w]);
    let v = l.next;
    let mut edges: Vec<_> = carried_edges(g1, &l.map1)
        .chain(carried_edges(g2, &l.map2))
        .collect();
    edges.extend(g1.neighbors(u).iter().map(|&x| (v, l.map1[x].unwrap())));
    edges.extend(g2.neighbors(w).iter().map(|&x| (v, l.map2[x].unwrap())));
    Ok(Glued {
        graph: Graph::from_valid_edges(v + 1, edges),
        map1: l.map1,
        map2: l.map2,
        created: vec![v],
    })
}

fn check_stable_neighborhood(g: &Graph, x: usize, which: u8) -> Result<(), ComposeError> {
    g.check_node(x)?;
    if g.degree(x) < 2 {
        return Err(ComposeError::NeighborhoodTooSmall { graph: which, node: x });
    }
    if !g.is_stable(&g.neighborhood(x)) {
        return Err(ComposeError::NeighborhoodNotStable { graph: which, node: x });
    }
    Ok(())
}

/// `O₂`: `N(u)` and `N(v)` must be stable sets of size at least two. Deletes
/// `u` and `v` and makes the two neighborhoods complete to each other.
pub fn op2_glue(g1: &Graph, u: usize, g2: &Graph, v: usize) -> Result<Graph, ComposeError> {
    glue2(g1, u, g2, v).map(|g| g.graph)
}

pub fn glue2(g1: &Graph, u: usize, g2: &Graph, v: usize) -> Result<Glued, ComposeError> {
    check_stable_neighborhood(g1, u, 1)?;
    check_stable_neighborhood(g2, v, 2)?;
    let l = layout(g1, &[u], g2, &[v]);
    let mut edges: Vec<_> = carried_edges(g1, &l.map1)
        .chain(carried_edges(g2, &l.map2))
        .collect();
    for &x in g1.neighbors(u) {
        for &y in g2.neighbors(v) {
            edges.push((l.map1[x].unwrap(), l.map2[y].unwrap()));
        }
    }
    Ok(Glued {
        graph: Graph::from_valid_edges(l.next, edges),
        map1: l.map1,
        map2: l.map2,
        created: Vec::new(),
    })
}

fn check_o3_node(g: &Graph, x: usize, which: u8) -> Result<(usize, usize), ComposeError> {
    g.check_node(x)?;
    if g.degree(x) != 2 {
        return Err(ComposeError::NotDegreeTwo { graph: which, node: x });
    }
    let (x1, x2) = (g.neighbors(x)[0], g.neighbors(x)[1]);
    if g.has_edge(x1, x2) {
        return Err(ComposeError::NeighborsAdjacent { graph: which, node: x });
    }
    if g.articulation_points().contains(x) {
        return Err(ComposeError::CutVertex { graph: which, node: x });
    }
    Ok((x1, x2))
}

/// `O₃` with the natural pairing: the smaller neighbor of `u` is merged with
/// the smaller neighbor of `v`. See [`glue3`] for the crossed pairing.
pub fn op3_glue(g1: &Graph, u: usize, g2: &Graph, v: usize) -> Result<Graph, ComposeError> {
    glue3(g1, u, g2, v, false).map(|g| g.graph)
}

/// `O₃`. `u` and `v` are degree-2 non-cut nodes with nonadjacent neighbors
/// `u1 < u2` and `v1 < v2` (swapped to `v2, v1` when `crossed`). Deletes
/// `u, u1, u2, v, v1, v2` and adds `w1` adjacent to
/// `(N(u1) − u) ∪ (N(v1) − v)` and `w2` adjacent to `(N(u2) − u) ∪ (N(v2) − v)`.
/// Requires `(d(u1) − 1) + (d(v1) − 1) ≥ 3` and likewise for `u2, v2`.
pub fn glue3(
    g1: &Graph,
    u: usize,
    g2: &Graph,
    v: usize,
    crossed: bool,
) -> Result<Glued, ComposeError> {
    let (u1, u2) = check_o3_node(g1, u, 1)?;
    let (mut v1, mut v2) = check_o3_node(g2, v, 2)?;
    if crossed {
        std::mem::swap(&mut v1, &mut v2);
    }
    for (pair, (a, b)) in [(1u8, (u1, v1)), (2u8, (u2, v2))] {
        let sum = (g1.degree(a) - 1) + (g2.degree(b) - 1);
        if sum < 3 {
            return Err(ComposeError::DegreeSum { pair, sum });
        }
    }
    let l = layout(g1, &[u, u1, u2], g2, &[v, v1, v2]);
    let (w1, w2) = (l.next, l.next + 1);
    let mut edges: Vec<_> = carried_edges(g1, &l.map1)
        .chain(carried_edges(g2, &l.map2))
        .collect();
    for (w, a, b) in [(w1, u1, v1), (w2, u2, v2)] {
        edges.extend(g1.neighbors(a).iter().filter(|&&x| x != u).map(|&x| (w, l.map1[x].unwrap())));
        edges.extend(g2.neighbors(b).iter().filter(|&&x| x != v).map(|&x| (w, l.map2[x].unwrap())));
    }
    Ok(Glued {
        graph: Graph::from_valid_edges(l.next + 2, edges),
        map1: l.map1,
        map2: l.map2,
        created: vec![w1, w2],
    })
}

/// Replaces every edge `uv` by a path `u-a-b-v` through two new nodes.
/// New nodes for the `k`-th edge (lexicographic order) are `n + 2k` and
/// `n + 2k + 1`.
pub fn two_subdivision(g: &Graph) -> Graph {
    let n = g.node_count();
    let mut edges = Vec::with_capacity(3 * g.edge_count());
    for (k, (u, v)) in g.edges().enumerate() {
        let (a, b) = (n + 2 * k, n + 2 * k + 1);
        edges.extend([(u, a), (a, b), (b, v)]);
    }
    Graph::from_valid_edges(n + 2 * g.edge_count(), edges)
}

/// Nodes of `g` whose neighborhood is a stable set of size at least two,
/// i.e. legal `O₂` gluing points.
pub fn o2_candidates(g: &Graph) -> NodeSet {
    g.nodes()
        .filter(|&x| g.degree(x) >= 2 && g.is_stable(&g.neighborhood(x)))
        .collect()
}
