use super::{Graph, NodeSet};

const UNSEEN: usize = usize::MAX;

impl Graph {
    /// Maximal connected node sets, ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<NodeSet> {
        self.components_avoiding(&[])
    }

    /// Components of `G - removed`.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<NodeSet> {
        let n = self.node_count();
        let mut comp = vec![UNSEEN; n];
        for &r in removed {
            comp[r] = UNSEEN - 1;
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != UNSEEN {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            stack.push(s);
            let mut members = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if comp[w] == UNSEEN {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(members.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() <= 1 || self.components_avoiding(&[]).len() == 1
    }

    /// Cut vertices, via an iterative low-link DFS. `O(n + m)`.
    pub fn articulation_points(&self) -> NodeSet {
        self.articulation_points_skipping(None)
    }

    /// Cut vertices of `G - skip` (ids stay those of `G`).
    pub(crate) fn articulation_points_skipping(&self, skip: Option<usize>) -> NodeSet {
        let mut cut = vec![false; self.node_count()];
        self.lowlink_dfs(skip, |ev| match ev {
            DfsEvent::Separates { parent, root: false, .. } => cut[parent] = true,
            DfsEvent::RootDone { root, children } if children >= 2 => cut[root] = true,
            _ => {}
        });
        (0..self.node_count()).filter(|&v| cut[v]).collect()
    }

    /// Smallest articulation point, if any.
    pub fn first_articulation_point(&self) -> Option<usize> {
        self.articulation_points().first()
    }

    /// Edge partition into biconnected components. Each component lists its
    /// edges as `(u, v)` with `u < v`, sorted; components are ordered by
    /// their smallest edge. Isolated nodes belong to no component.
    pub fn biconnected_components(&self) -> Vec<Vec<(usize, usize)>> {
        let mut comps: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        self.lowlink_dfs(None, |ev| match ev {
            DfsEvent::TreeEdge(u, v) | DfsEvent::BackEdge(u, v) => edge_stack.push((u, v)),
            DfsEvent::Separates { parent, child, .. } => {
                let mut comp = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    comp.push((a.min(b), a.max(b)));
                    if (a, b) == (parent, child) {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
            DfsEvent::RootDone { .. } => {}
        });
        comps.sort();
        comps
    }

    /// Node sets of the biconnected components (see
    /// [`Graph::biconnected_components`]).
    pub fn biconnected_node_sets(&self) -> Vec<NodeSet> {
        self.biconnected_components()
            .into_iter()
            .map(|c| c.into_iter().flat_map(|(u, v)| [u, v]).collect())
            .collect()
    }

    /// Iterative Hopcroft–Tarjan DFS reporting tree and back edges, and each
    /// time a finished child subtree satisfies `low[child] >= disc[parent]`.
    /// For a DFS root that condition holds for every child. `skip` is treated
    /// as deleted.
    fn lowlink_dfs<F: FnMut(DfsEvent)>(&self, skip: Option<usize>, mut emit: F) {
        let n = self.node_count();
        let mut disc = vec![UNSEEN; n];
        if let Some(s) = skip {
            disc[s] = UNSEEN - 1;
        }
        let mut low = vec![0usize; n];
        let mut time = 0;
        // (node, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, UNSEEN, 0));
            let mut children = 0;
            while let Some(frame) = stack.last_mut() {
                let (u, parent, idx) = *frame;
                if idx < self.neighbors(u).len() {
                    frame.2 += 1;
                    let w = self.neighbors(u)[idx];
                    if Some(w) == skip {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        emit(DfsEvent::TreeEdge(u, w));
                        stack.push((w, u, 0));
                    } else if w != parent && disc[w] < disc[u] {
                        low[u] = low[u].min(disc[w]);
                        emit(DfsEvent::BackEdge(u, w));
                    }
                } else {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            let is_root = parent == root;
                            if is_root {
                                children += 1;
                            }
                            emit(DfsEvent::Separates {
                                parent,
                                child: u,
                                root: is_root,
                            });
                        }
                    }
                }
            }
            emit(DfsEvent::RootDone { root, children });
        }
    }
}

enum DfsEvent {
    TreeEdge(usize, usize),
    BackEdge(usize, usize),
    Separates { parent: usize, child: usize, root: bool },
    RootDone { root: usize, children: usize },
}
