//! Backtracking search for induced embeddings: injective maps `φ` from a
//! pattern into a host with `uv ∈ E(pattern) ⟺ φ(u)φ(v) ∈ E(host)`.
//!
//! Used to test membership in the fixed Petersen/Heawood graphs (pattern is
//! the input, host has at most 14 nodes) and, in the other direction, to
//! look for a Petersen copy inside a larger graph.

use crate::graph::Graph;

/// Pattern nodes in an order where every node after the first of its
/// component has an earlier neighbor; `anchor[k]` is that neighbor.
fn search_order(pattern: &Graph) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = pattern.node_count();
    let mut order = Vec::with_capacity(n);
    let mut anchor = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        order.push(s);
        anchor.push(None);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            // Prefer high-degree nodes early: they prune hardest.
            let mut next: Vec<usize> = pattern
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| !placed[w])
                .collect();
            next.sort_by_key(|&w| std::cmp::Reverse(pattern.degree(w)));
            for w in next {
                placed[w] = true;
                order.push(w);
                anchor.push(Some(u));
            }
        }
    }
    (order, anchor)
}

struct Search<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, depth: usize, p: usize, h: usize) -> bool {
        if self.used[h] || self.host.degree(h) < self.pattern.degree(p) {
            return false;
        }
        self.order[..depth].iter().all(|&q| {
            self.pattern.has_edge(p, q) == self.host.has_edge(h, self.image[q])
        })
    }

    fn run<F: FnMut(&[usize]) -> bool>(&mut self, depth: usize, visit: &mut F) -> bool {
        if depth == self.order.len() {
            return visit(&self.image);
        }
        let p = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(a) => self.host.neighbors(self.image[a]).to_vec(),
            None => self.host.nodes().collect(),
        };
        for h in candidates {
            if !self.consistent(depth, p, h) {
                continue;
            }
            self.image[p] = h;
            self.used[h] = true;
            let stop = self.run(depth + 1, visit);
            self.used[h] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Calls `visit` on each induced embedding until it returns `true`.
/// Returns whether the search was stopped by `visit`.
pub fn for_each_induced_embedding<F>(pattern: &Graph, host: &Graph, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if pattern.node_count() > host.node_count() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let (order, anchor) = search_order(pattern);
    let mut s = Search {
        pattern,
        host,
        order,
        anchor,
        image: vec![usize::MAX; pattern.node_count()],
        used: vec![false; host.node_count()],
    };
    s.run(0, &mut visit)
}

/// First induced embedding of `pattern` into `host` in search order.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_embedding(pattern, host, |img| {
        found = Some(img.to_vec());
        true
    });
    found
}

/// All automorphisms of `g` as node permutations, in search order.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_induced_embedding(g, g, |img| {
        out.push(img.to_vec());
        false
    });
    out
}

/// Checks that `map` is an injective, adjacency preserving and reflecting
/// map from `pattern` into `host`.
pub fn is_induced_embedding(pattern: &Graph, host: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.node_count() || map.iter().any(|&h| h >= host.node_count()) {
        return false;
    }
    let mut seen = vec![false; host.node_count()];
    for &h in map {
        if std::mem::replace(&mut seen[h], true) {
            return false;
        }
    }
    for u in pattern.nodes() {
        for v in u + 1..pattern.node_count() {
            if pattern.has_edge(u, v) != host.has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::{make_heawood, make_petersen};
    use crate::graph::named::*;

    #[test]
    fn petersen_has_120_automorphisms() {
        assert_eq!(automorphisms(&make_petersen()).len(), 120);
    }

    #[test]
    fn heawood_has_336_automorphisms() {
        assert_eq!(automorphisms(&make_heawood()).len(), 336);
    }

    #[test]
    fn c6_embeds_in_petersen_but_c4_does_not() {
        let p = make_petersen();
        let phi = find_induced_embedding(&cycle(6), &p).unwrap();
        assert!(is_induced_embedding(&cycle(6), &p, &phi));
        assert!(find_induced_embedding(&cycle(4), &p).is_none());
    }

    #[test]
    fn disconnected_pattern() {
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let phi = find_induced_embedding(&two_edges, &cycle(6)).unwrap();
        assert!(is_induced_embedding(&two_edges, &cycle(6), &phi));
        assert!(find_induced_embedding(&two_edges, &cycle(4)).is_none());
    }
}
