use std::collections::VecDeque;

use super::{Graph, NodeSet};

impl Graph {
    /// Two-coloring classes `(A, B)` when the graph is bipartite. BFS from
    /// each component's smallest node, which goes into `A`.
    pub fn bipartition(&self) -> Option<(NodeSet, NodeSet)> {
        let side = self.two_coloring()?;
        let a = self.nodes().filter(|&v| side[v] == 0).collect();
        let b = self.nodes().filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Per-node side (0/1) of a proper 2-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.node_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Some triangle `[u, v, w]` with `u < v < w`, lexicographically first.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let (nu, nv) = (self.neighbors(u), self.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if nu[i] > v {
                            return Some([u, v, nu[i]]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        None
    }

    /// Some chordless 4-cycle, returned in cycle order `[u, w1, x, w2]`.
    ///
    /// For every node `u`, collects the middle nodes of all `u-w-x` paths with
    /// `x > u` nonadjacent to `u`; a square exists iff some `x` has two
    /// nonadjacent middles. `O(n·m)` in the worst case.
    pub fn find_square(&self) -> Option<[usize; 4]> {
        let n = self.node_count();
        let mut middles: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut touched = Vec::new();
        let mut adj_to_u = vec![false; n];
        for u in 0..n {
            for &w in self.neighbors(u) {
                adj_to_u[w] = true;
            }
            for &w in self.neighbors(u) {
                for &x in self.neighbors(w) {
                    if x <= u || adj_to_u[x] {
                        continue;
                    }
                    if middles[x].is_empty() {
                        touched.push(x);
                    }
                    middles[x].push(w);
                }
            }
            let mut found = None;
            'scan: for &x in &touched {
                let mids = &middles[x];
                for i in 0..mids.len() {
                    for j in i + 1..mids.len() {
                        if !self.has_edge(mids[i], mids[j]) {
                            found = Some([u, mids[i], x, mids[j]]);
                            break 'scan;
                        }
                    }
                }
            }
            for &x in &touched {
                middles[x].clear();
            }
            touched.clear();
            for &w in self.neighbors(u) {
                adj_to_u[w] = false;
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.node_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}
