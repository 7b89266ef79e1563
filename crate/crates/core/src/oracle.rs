//! Brute-force reference implementations.
//!
//! Nothing here calls into the decomposition or coloring code; the only
//! dependency is adjacency lookup on [`Graph`]. Everything is exhaustive and
//! guarded by a size budget.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chromatic::{AdmissiblePair, Coloring, ThirdColor};
use crate::decomp::Split;
use crate::graph::{Graph, NodeSet};

pub const UNIQUE_CHORD_LIMIT: usize = 16;
pub const CHROMATIC_LIMIT: usize = 11;
pub const CLIQUE_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} nodes, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

fn budget(g: &Graph, limit: usize) -> Result<(), OracleError> {
    let n = g.node_count();
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.nodes()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// A cycle (in traversal order) together with its only chord.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniqueChordWitness {
    pub cycle: Vec<usize>,
    pub chord: (usize, usize),
}

impl UniqueChordWitness {
    /// Re-checks the witness against `g`: the cycle is a cycle of `g` and
    /// the chord is the only other edge among its nodes.
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        let n = g.node_count();
        if k < 4 || self.cycle.iter().any(|&v| v >= n) {
            return false;
        }
        let mut sorted = self.cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return false;
        }
        if (0..k).any(|i| !g.has_edge(self.cycle[i], self.cycle[(i + 1) % k])) {
            return false;
        }
        let (p, q) = self.chord;
        let pos = |x| self.cycle.iter().position(|&v| v == x);
        let (Some(i), Some(j)) = (pos(p), pos(q)) else {
            return false;
        };
        let gap = i.abs_diff(j);
        if gap == 1 || gap == k - 1 || !g.has_edge(p, q) {
            return false;
        }
        let mut edges = 0;
        for (x, &u) in sorted.iter().enumerate() {
            for &w in &sorted[x + 1..] {
                edges += usize::from(g.has_edge(u, w));
            }
        }
        edges == k + 1
    }
}

/// A cycle with a unique chord, found by scanning every node subset.
///
/// `S` qualifies when `G[S]` has `|S| + 1` edges, exactly two nodes of
/// degree 3 which are adjacent, every other node of degree 2, and removing
/// the edge between the two degree-3 nodes leaves one cycle through all of
/// `S`.
pub fn has_unique_chord_cycle(g: &Graph) -> Result<Option<UniqueChordWitness>, OracleError> {
    budget(g, UNIQUE_CHORD_LIMIT)?;
    let n = g.node_count();
    let adj = adjacency_masks(g);
    for s in 0u32..(1u32 << n) {
        let size = s.count_ones() as usize;
        if size < 4 {
            continue;
        }
        let mut twice_edges = 0;
        let mut threes = Vec::new();
        let mut ok = true;
        for (v, &nv) in adj.iter().enumerate() {
            if s >> v & 1 == 0 {
                continue;
            }
            let d = (nv & s).count_ones() as usize;
            twice_edges += d;
            match d {
                2 => {}
                3 if threes.len() < 2 => threes.push(v),
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok || threes.len() != 2 || twice_edges != 2 * (size + 1) {
            continue;
        }
        let (p, q) = (threes[0], threes[1]);
        if adj[p] >> q & 1 == 0 {
            continue;
        }
        if let Some(cycle) = spanning_cycle(&adj, s, (p, q)) {
            return Ok(Some(UniqueChordWitness { cycle, chord: (p, q) }));
        }
    }
    Ok(None)
}

/// Walks the 2-regular graph `G[s] − pq`; returns the node order if it is
/// one cycle covering `s`.
fn spanning_cycle(adj: &[u32], s: u32, (p, q): (usize, usize)) -> Option<Vec<usize>> {
    let nbrs = |v: usize| {
        let mut m = adj[v] & s;
        if v == p {
            m &= !(1 << q);
        }
        if v == q {
            m &= !(1 << p);
        }
        m
    };
    let start = s.trailing_zeros() as usize;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = nbrs(start).trailing_zeros() as usize;
    while cur != start {
        cycle.push(cur);
        let next = (nbrs(cur) & !(1 << prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    (cycle.len() == s.count_ones() as usize).then_some(cycle)
}

/// Chromatic number by backtracking over `k = 1, 2, ...`.
pub fn chromatic_number_bruteforce(g: &Graph) -> Result<usize, OracleError> {
    budget(g, CHROMATIC_LIMIT)?;
    let n = g.node_count();
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let mut color = vec![0usize; n];
    fn extend(adj: &[u32], color: &mut [usize], v: usize, used: usize, k: usize) -> bool {
        if v == color.len() {
            return true;
        }
        for c in 1..=(used + 1).min(k) {
            if (0..v).any(|w| adj[v] >> w & 1 == 1 && color[w] == c) {
                continue;
            }
            color[v] = c;
            if extend(adj, color, v + 1, used.max(c), k) {
                return true;
            }
        }
        color[v] = 0;
        false
    }
    Ok((1..=n)
        .find(|&k| extend(&adj, &mut color, 0, 0, k))
        .expect("n colors always suffice"))
}

/// A maximum clique, by scanning every node subset.
pub fn max_clique_bruteforce(g: &Graph) -> Result<NodeSet, OracleError> {
    budget(g, CLIQUE_LIMIT)?;
    let n = g.node_count();
    let adj = adjacency_masks(g);
    let mut best = 0u32;
    for s in 0u32..(1u32 << n) {
        if s.count_ones() <= best.count_ones() {
            continue;
        }
        if (0..n).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !adj[v] == 0) {
            best = s;
        }
    }
    Ok((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

/// Whether `G − S` has an odd cycle (`odd_only`) or any cycle, by
/// search over the remaining nodes.
fn remainder_has_cycle(g: &Graph, s: &NodeSet, odd_only: bool) -> bool {
    let n = g.node_count();
    let mut removed = vec![false; n];
    for v in s {
        removed[v] = true;
    }
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if removed[root] || depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if removed[w] {
                    continue;
                }
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    stack.push(w);
                } else if odd_only {
                    if depth[w] % 2 == depth[u] % 2 {
                        return true;
                    }
                } else if parent[u] != w {
                    return true;
                }
            }
        }
    }
    false
}

/// `S` is stable and meets every cycle (`strong`) or every odd cycle.
pub fn validate_third_color(g: &Graph, s: &NodeSet, strong: bool) -> bool {
    let n = g.node_count();
    if s.iter().any(|v| v >= n) {
        return false;
    }
    if s.iter().any(|v| g.neighbors(v).iter().any(|&w| s.contains(w))) {
        return false;
    }
    !remainder_has_cycle(g, s, !strong)
}

/// [`validate_third_color`] plus `T ⊆ S` and `S ∩ R = ∅`.
pub fn validate_third_color_for(g: &Graph, pair: &AdmissiblePair, tc: &ThirdColor) -> bool {
    pair.t.iter().all(|v| tc.s.contains(v))
        && pair.r.iter().all(|v| !tc.s.contains(v))
        && validate_third_color(g, &tc.s, tc.strong)
}

/// Proper, uses exactly the colors `1..=num_colors`, one per node.
pub fn validate_coloring(g: &Graph, coloring: &Coloring) -> bool {
    let n = g.node_count();
    let k = coloring.num_colors;
    if coloring.color.len() != n {
        return false;
    }
    let mut used = vec![false; k + 1];
    for &c in &coloring.color {
        if c == 0 || c > k {
            return false;
        }
        used[c] = true;
    }
    if used[1..].iter().any(|&u| !u) {
        return false;
    }
    (0..n).all(|u| g.neighbors(u).iter().all(|&w| coloring.color[u] != coloring.color[w]))
}

/// The defining conditions of each kind of split.
pub fn validate_split(g: &Graph, split: &Split) -> bool {
    let n = g.node_count();
    let (x, y, middle): (&NodeSet, &NodeSet, Vec<usize>) = match split {
        Split::OneCutset { x, y, v } => (x, y, vec![*v]),
        Split::ProperOneJoin { x, y, .. } => (x, y, vec![]),
        Split::ProperTwoCutset { x, y, a, b } => (x, y, vec![*a, *b]),
    };
    let mut part = vec![0u8; n];
    for (tag, nodes) in [(1u8, x.as_slice()), (2, y.as_slice()), (3, middle.as_slice())] {
        for &v in nodes {
            if v >= n || part[v] != 0 {
                return false;
            }
            part[v] = tag;
        }
    }
    if part.contains(&0) {
        return false;
    }
    let crossing = |u: usize, w: usize| part[u] == 1 && part[w] == 2;
    match split {
        Split::OneCutset { .. } => !x.is_empty() && !y.is_empty() && !g.edges().any(|(u, w)| crossing(u, w) || crossing(w, u)),
        Split::ProperOneJoin { a, b, .. } => {
            let stable = |s: &NodeSet| s.iter().all(|u| s.iter().all(|w| !g.has_edge(u, w)));
            x.len() >= 2
                && y.len() >= 2
                && a.len() >= 2
                && b.len() >= 2
                && a.iter().all(|v| v < n && part[v] == 1)
                && b.iter().all(|v| v < n && part[v] == 2)
                && stable(a)
                && stable(b)
                && a.iter().all(|u| b.iter().all(|w| g.has_edge(u, w)))
                && g.edges().all(|(u, w)| {
                    let (u, w) = if part[u] == 2 { (w, u) } else { (u, w) };
                    !crossing(u, w) || (a.contains(u) && b.contains(w))
                })
        }
        Split::ProperTwoCutset { a, b, .. } => {
            let (a, b) = (*a, *b);
            let through = |side: u8| {
                let mut seen = vec![false; n];
                let mut stack = vec![a];
                seen[a] = true;
                while let Some(u) = stack.pop() {
                    for &w in g.neighbors(u) {
                        if w == b {
                            return true;
                        }
                        if !seen[w] && part[w] == side {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                false
            };
            x.len() >= 2
                && y.len() >= 2
                && !g.has_edge(a, b)
                && g.neighbors(a).len() >= 3
                && g.neighbors(b).len() >= 3
                && !g.edges().any(|(u, w)| crossing(u, w) || crossing(w, u))
                && through(1)
                && through(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::petersen_ids::{a, b};
    use crate::compose::{make_heawood, make_petersen};
    use crate::graph::named::*;

    /// Every cycle of `g` as a node sequence starting at its smallest node.
    fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
        fn walk(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
            let (start, last) = (path[0], *path.last().unwrap());
            for &w in g.neighbors(last) {
                if w == start && path.len() >= 3 && path[1] < last {
                    out.push(path.clone());
                } else if w > start && !on[w] {
                    on[w] = true;
                    path.push(w);
                    walk(g, path, on, out);
                    path.pop();
                    on[w] = false;
                }
            }
        }
        let mut out = Vec::new();
        let mut on = vec![false; g.node_count()];
        for v in g.nodes() {
            on[v] = true;
            walk(g, &mut vec![v], &mut on, &mut out);
            on[v] = false;
        }
        out
    }

    fn chord_count(g: &Graph, cycle: &[usize]) -> usize {
        let k = cycle.len();
        let mut c = 0;
        for i in 0..k {
            for j in i + 2..k {
                if (i, j) != (0, k - 1) && g.has_edge(cycle[i], cycle[j]) {
                    c += 1;
                }
            }
        }
        c
    }

    fn graph_from_mask(n: usize, mask: u64) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).collect();
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn unique_chord_examples() {
        let w = has_unique_chord_cycle(&diamond()).unwrap().unwrap();
        assert!(w.validate(&diamond()));
        assert_eq!(w.cycle.len(), 4);
        assert!(has_unique_chord_cycle(&make_petersen()).unwrap().is_none());
        assert!(has_unique_chord_cycle(&cycle(6)).unwrap().is_none());
        assert!(has_unique_chord_cycle(&complete(4)).unwrap().is_none());
        assert!(has_unique_chord_cycle(&make_heawood()).unwrap().is_none());
        assert_eq!(
            has_unique_chord_cycle(&cycle(17)),
            Err(OracleError::TooLarge { n: 17, limit: 16 })
        );
    }

    #[test]
    fn two_triangles_joined_by_an_edge_are_not_a_witness() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        assert!(has_unique_chord_cycle(&g).unwrap().is_none());
    }

    #[test]
    fn petersen_plus_an_edge() {
        let p = make_petersen();
        for u in 0..10 {
            for v in u + 1..10 {
                if p.has_edge(u, v) {
                    continue;
                }
                let g = Graph::from_edges(10, p.edges().chain([(u, v)])).unwrap();
                let w = has_unique_chord_cycle(&g).unwrap().expect("extra edge creates a witness");
                assert!(w.validate(&g));
            }
        }
    }

    #[test]
    fn subset_scan_matches_cycle_enumeration() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for n in 4..=10usize {
            for _ in 0..60 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let g = graph_from_mask(n, state);
                let by_cycles = all_cycles(&g).iter().any(|c| chord_count(&g, c) == 1);
                let found = has_unique_chord_cycle(&g).unwrap();
                assert_eq!(found.is_some(), by_cycles, "{:?}", g.edges().collect::<Vec<_>>());
                if let Some(w) = found {
                    assert!(w.validate(&g));
                }
            }
        }
    }

    #[test]
    fn reformulations_agree_with_cycle_definitions() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for n in 3..=9usize {
            for _ in 0..40 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let g = graph_from_mask(n, state);
                let cycles = all_cycles(&g);
                for s_mask in 0u32..(1 << n) {
                    let s: NodeSet = (0..n).filter(|&v| s_mask >> v & 1 == 1).collect();
                    let stable = s.iter().all(|u| s.iter().all(|w| !g.has_edge(u, w)));
                    let meets = |c: &Vec<usize>| c.iter().any(|&v| s.contains(v));
                    let strong = stable && cycles.iter().all(meets);
                    let weak = stable && cycles.iter().filter(|c| c.len() % 2 == 1).all(meets);
                    assert_eq!(validate_third_color(&g, &s, true), strong);
                    assert_eq!(validate_third_color(&g, &s, false), weak);
                }
            }
        }
    }

    #[test]
    fn chromatic_and_clique() {
        assert_eq!(chromatic_number_bruteforce(&cycle(5)), Ok(3));
        assert_eq!(chromatic_number_bruteforce(&make_petersen()), Ok(3));
        assert_eq!(chromatic_number_bruteforce(&complete(5)), Ok(5));
        assert_eq!(chromatic_number_bruteforce(&Graph::empty(0)), Ok(0));
        assert!(chromatic_number_bruteforce(&cycle(12)).is_err());
        let mut edges: Vec<(usize, usize)> = complete(5).edges().collect();
        edges.extend((0..7).map(|i| (5 + i, 5 + (i + 1) % 7)));
        let g = Graph::from_edges(12, edges).unwrap();
        assert_eq!(max_clique_bruteforce(&g).unwrap(), (0..5).collect());
        assert_eq!(max_clique_bruteforce(&make_petersen()).unwrap().len(), 2);
        assert!(max_clique_bruteforce(&cycle(21)).is_err());
    }

    #[test]
    fn third_color_examples() {
        let p = make_petersen();
        assert!(validate_third_color(&p, &[a(2), a(5), b(1)].into(), false));
        assert!(!validate_third_color(&p, &[a(2), a(5), b(1)].into(), true));
        assert!(validate_third_color(&p, &[a(3), b(3), b(5)].into(), true));
        assert!(validate_third_color(&cycle(4), &NodeSet::singleton(0), true));
        assert!(!validate_third_color(&complete(3), &NodeSet::new(), false));
        assert!(!validate_third_color(&cycle(4), &[0, 1].into(), false));
    }

    #[test]
    fn coloring_checks() {
        let g = cycle(5);
        assert!(validate_coloring(&g, &Coloring { color: vec![1, 2, 1, 2, 3], num_colors: 3 }));
        assert!(!validate_coloring(&g, &Coloring { color: vec![1, 2, 1, 2, 1], num_colors: 2 }));
        assert!(!validate_coloring(&g, &Coloring { color: vec![1, 2, 1, 2, 4], num_colors: 4 }));
        assert!(!validate_coloring(&g, &Coloring { color: vec![1, 2, 1, 2], num_colors: 2 }));
    }

    #[test]
    fn split_checks_agree_with_the_decomposition_checker() {
        let g = theta(&[3, 3, 3, 3]);
        let good = Split::ProperTwoCutset { x: [2, 3].into(), y: (4..10).collect(), a: 0, b: 1 };
        assert!(validate_split(&g, &good));
        let bad = Split::ProperTwoCutset { x: [2, 3, 4].into(), y: (5..10).collect(), a: 0, b: 1 };
        assert!(!validate_split(&g, &bad));
        let k23 = complete_bipartite(2, 3);
        let join = Split::ProperOneJoin { x: [0, 1, 2].into(), y: [3, 4].into(), a: [0, 1].into(), b: [3, 4].into() };
        assert_eq!(validate_split(&k23, &join), join.check(&k23).is_ok());
        let cut = Split::OneCutset { x: [0, 1, 2].into(), y: [4, 5, 6].into(), v: 3 };
        let bow = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert!(validate_split(&bow, &cut));
        for s in [&good, &bad, &cut] {
            for h in [&g, &bow] {
                assert_eq!(validate_split(h, s), s.check(h).is_ok());
            }
        }
    }
}
