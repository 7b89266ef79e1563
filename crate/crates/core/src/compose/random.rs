//! Seeded random generation of graphs in C by gluing random basic graphs.
//!
//! Every output comes with a [`BuildLog`] that [`replay`] turns back into
//! the identical graph without touching a random number generator.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{glue0, glue1, glue2, glue3, make_heawood, make_petersen, ComposeError};
use crate::graph::named::{complete, cycle};
use crate::graph::Graph;

/// A basic graph, described explicitly enough to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasicSpec {
    Clique { size: usize },
    Hole { length: usize },
    /// Nodes `0..y` form the high-degree side; node `y + i` is adjacent to
    /// both ends of `pairs[i]`.
    Strongly2Bipartite { y: usize, pairs: Vec<(usize, usize)> },
    PetersenSub { removed: Vec<usize> },
    HeawoodSub { removed: Vec<usize> },
}

impl BasicSpec {
    pub fn build(&self) -> Graph {
        match self {
            BasicSpec::Clique { size } => complete(*size),
            BasicSpec::Hole { length } => cycle(*length),
            BasicSpec::Strongly2Bipartite { y, pairs } => {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &(p, q))| [(y + i, p), (y + i, q)]);
                Graph::from_valid_edges(y + pairs.len(), edges)
            }
            BasicSpec::PetersenSub { removed } => delete_nodes(&make_petersen(), removed),
            BasicSpec::HeawoodSub { removed } => delete_nodes(&make_heawood(), removed),
        }
    }
}

fn delete_nodes(g: &Graph, removed: &[usize]) -> Graph {
    let keep: Vec<usize> = g.nodes().filter(|v| !removed.contains(v)).collect();
    g.induced_unchecked(&keep).0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OpKind {
    O0,
    O1,
    O2,
    O3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Start {
        basic: BasicSpec,
    },
    /// Glue the current graph at `u` with a fresh copy of `basic` at `w`.
    Glue {
        op: OpKind,
        u: usize,
        basic: BasicSpec,
        w: usize,
        #[serde(default)]
        crossed: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildLog {
    pub seed: u64,
    pub target_size: usize,
    pub steps: Vec<Step>,
}

/// Relative weights of the basic classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicMix {
    pub clique: u32,
    pub hole: u32,
    pub strongly_2_bipartite: u32,
    pub petersen: u32,
    pub heawood: u32,
}

impl BasicMix {
    pub const ALL: BasicMix = BasicMix {
        clique: 3,
        hole: 3,
        strongly_2_bipartite: 2,
        petersen: 3,
        heawood: 1,
    };
    pub const CLIQUES: BasicMix = BasicMix {
        clique: 1,
        hole: 0,
        strongly_2_bipartite: 0,
        petersen: 0,
        heawood: 0,
    };
    pub const TRIANGLE_FREE: BasicMix = BasicMix { clique: 0, ..BasicMix::ALL };
}

/// Relative weights of the gluing operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpMix {
    pub o0: u32,
    pub o1: u32,
    pub o2: u32,
    pub o3: u32,
}

impl OpMix {
    pub const ALL: OpMix = OpMix { o0: 0, o1: 2, o2: 2, o3: 3 };
    pub const O1_ONLY: OpMix = OpMix { o0: 0, o1: 1, o2: 0, o3: 0 };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub basics: BasicMix,
    pub ops: OpMix,
    /// Permits `O₀`, which may disconnect the output.
    pub allow_disconnected: bool,
    /// Upper bound on the node count of a single basic piece.
    pub max_basic: usize,
    /// Failed gluing attempts tolerated before returning early.
    pub retry_budget: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            basics: BasicMix::ALL,
            ops: OpMix::ALL,
            allow_disconnected: false,
            max_basic: 14,
            retry_budget: 200,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub log: BuildLog,
}

/// Grows a graph in C from random basic pieces until it has at least
/// `target_size` nodes, or the retry budget runs out.
pub fn random_c_graph(seed: u64, target_size: usize, config: &GenConfig) -> Generated {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = random_basic(&mut rng, &config.basics, target_size.clamp(1, config.max_basic));
    let mut graph = first.build();
    let mut steps = vec![Step::Start { basic: first }];
    let mut failures = 0;
    while graph.node_count() < target_size && failures < config.retry_budget {
        let Some(op) = pick_op(&mut rng, &config.ops, config.allow_disconnected) else {
            break;
        };
        let room = (target_size - graph.node_count() + 4).clamp(3, config.max_basic.max(3));
        let size = rng.gen_range(1..=room);
        let basic = random_basic(&mut rng, &config.basics, size);
        let piece = basic.build();
        let crossed = rng.gen_bool(0.5);
        let (Some(u), Some(w)) = (
            pick_site(&mut rng, &graph, op),
            pick_site(&mut rng, &piece, op),
        ) else {
            failures += 1;
            continue;
        };
        match apply(op, &graph, u, &piece, w, crossed) {
            Ok(next) => {
                graph = next;
                steps.push(Step::Glue { op, u, basic, w, crossed });
                failures = 0;
            }
            Err(_) => failures += 1,
        }
    }
    Generated {
        graph,
        log: BuildLog { seed, target_size, steps },
    }
}

/// Rebuilds the graph recorded in `log`.
pub fn replay(log: &BuildLog) -> Result<Graph, ComposeError> {
    let mut graph: Option<Graph> = None;
    for step in &log.steps {
        graph = Some(match (step, graph) {
            (Step::Start { basic }, _) => basic.build(),
            (Step::Glue { op, u, basic, w, crossed }, Some(g)) => {
                apply(*op, &g, *u, &basic.build(), *w, *crossed)?
            }
            (Step::Glue { .. }, None) => Graph::empty(0),
        });
    }
    Ok(graph.unwrap_or_default())
}

fn apply(
    op: OpKind,
    g: &Graph,
    u: usize,
    piece: &Graph,
    w: usize,
    crossed: bool,
) -> Result<Graph, ComposeError> {
    let glued = match op {
        OpKind::O0 => glue0(g, piece),
        OpKind::O1 => glue1(g, u, piece, w)?,
        OpKind::O2 => glue2(g, u, piece, w)?,
        OpKind::O3 => glue3(g, u, piece, w, crossed)?,
    };
    Ok(glued.graph)
}

fn pick_op(rng: &mut ChaCha8Rng, mix: &OpMix, allow_disconnected: bool) -> Option<OpKind> {
    let o0 = if allow_disconnected { mix.o0 } else { 0 };
    let weights = [(OpKind::O0, o0), (OpKind::O1, mix.o1), (OpKind::O2, mix.o2), (OpKind::O3, mix.o3)];
    weights
        .choose_weighted(rng, |&(_, wt)| wt)
        .ok()
        .map(|&(op, _)| op)
}

/// A random node that plausibly satisfies the local precondition of `op`.
/// A few random probes are tried; the gluing itself re-checks everything.
fn pick_site(rng: &mut ChaCha8Rng, g: &Graph, op: OpKind) -> Option<usize> {
    let n = g.node_count();
    if n == 0 {
        return None;
    }
    let ok = |v: usize| match op {
        OpKind::O0 | OpKind::O1 => true,
        OpKind::O2 => g.degree(v) >= 2 && g.is_stable(&g.neighborhood(v)),
        OpKind::O3 => {
            g.degree(v) == 2 && !g.has_edge(g.neighbors(v)[0], g.neighbors(v)[1])
        }
    };
    for _ in 0..24 {
        let v = rng.gen_range(0..n);
        if ok(v) {
            return Some(v);
        }
    }
    None
}

fn random_basic(rng: &mut ChaCha8Rng, mix: &BasicMix, size: usize) -> BasicSpec {
    let size = size.max(1);
    let kinds = [
        (0u8, mix.clique),
        (1, mix.hole),
        (2, if size >= 10 { mix.strongly_2_bipartite } else { 0 }),
        (3, mix.petersen),
        (4, if size >= 4 { mix.heawood } else { 0 }),
    ];
    let kind = match kinds.choose_weighted(rng, |&(_, wt)| wt) {
        Ok(&(k, _)) => k,
        Err(_) => 0,
    };
    match kind {
        0 => BasicSpec::Clique { size: rng.gen_range(1..=size.min(6)) },
        1 => {
            let length = if size < 5 { 3 } else { rng.gen_range(5..=size.max(5)) };
            BasicSpec::Hole { length }
        }
        2 => random_strongly_2_bipartite(rng, size),
        3 => BasicSpec::PetersenSub {
            removed: random_connected_deletion(rng, &make_petersen(), 10 - size.clamp(4, 10)),
        },
        _ => BasicSpec::HeawoodSub {
            removed: random_connected_deletion(rng, &make_heawood(), 14 - size.clamp(4, 14)),
        },
    }
}

/// Subdivides a random connected simple graph of minimum degree three, so
/// every subdivision node gets two distinct high-degree neighbors and no two
/// share the same pair (a shared pair would close a square).
fn random_strongly_2_bipartite(rng: &mut ChaCha8Rng, size: usize) -> BasicSpec {
    // k + (#edges) nodes with #edges >= 3k/2.
    let k = (2 * size / 5).max(4);
    let mut adj = vec![vec![false; k]; k];
    let mut deg = vec![0usize; k];
    let mut pairs = Vec::new();
    let mut add = |p: usize, q: usize, deg: &mut Vec<usize>| {
        if p != q && !adj[p][q] {
            adj[p][q] = true;
            adj[q][p] = true;
            deg[p] += 1;
            deg[q] += 1;
            pairs.push((p.min(q), p.max(q)));
        }
    };
    for v in 1..k {
        let p = rng.gen_range(0..v);
        add(p, v, &mut deg);
    }
    for _ in 0..10_000 {
        let Some(low) = (0..k).find(|&v| deg[v] < 3) else { break };
        let q = rng.gen_range(0..k);
        add(low, q, &mut deg);
    }
    BasicSpec::Strongly2Bipartite { y: k, pairs }
}

/// `count` distinct nodes whose removal leaves `g` connected.
fn random_connected_deletion(rng: &mut ChaCha8Rng, g: &Graph, count: usize) -> Vec<usize> {
    let mut removed: Vec<usize> = Vec::new();
    let mut alive: Vec<usize> = g.nodes().collect();
    while removed.len() < count {
        alive.shuffle(rng);
        let pick = alive.iter().copied().find(|&v| {
            let mut trial = removed.clone();
            trial.push(v);
            g.components_avoiding(&trial).len() == 1
        });
        match pick {
            Some(v) => {
                removed.push(v);
                alive.retain(|&x| x != v);
            }
            None => break,
        }
    }
    removed.sort_unstable();
    removed
}

/// A hole (chordless cycle) of length at least `min_len`, in cycle order.
///
/// For every induced path `a-v-c`, a shortest `a..c` path avoiding the rest
/// of `N[v]` is chordless, so closing it through `v` gives a hole. Only holes that
/// arise this way are found, which is enough for mutation testing.
pub fn find_hole(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let n = g.node_count();
    let mut blocked = vec![false; n];
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in g.nodes() {
        let nv = g.neighbors(v);
        for (i, &a) in nv.iter().enumerate() {
            for &c in &nv[i + 1..] {
                if g.has_edge(a, c) {
                    continue;
                }
                blocked.iter_mut().for_each(|b| *b = false);
                blocked[v] = true;
                for &x in nv {
                    blocked[x] = x != a && x != c;
                }
                prev.iter_mut().for_each(|p| *p = usize::MAX);
                queue.clear();
                queue.push_back(a);
                prev[a] = a;
                while let Some(x) = queue.pop_front() {
                    if x == c {
                        break;
                    }
                    for &y in g.neighbors(x) {
                        if !blocked[y] && prev[y] == usize::MAX {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if prev[c] == usize::MAX {
                    continue;
                }
                let mut path = vec![c];
                while *path.last().unwrap() != a {
                    path.push(prev[*path.last().unwrap()]);
                }
                if path.len() + 1 >= min_len {
                    path.push(v);
                    return Some(path);
                }
            }
        }
    }
    None
}

/// Adds one chord to `hole` (length at least 4) between its first node and
/// the node two steps along, producing a cycle with a unique chord.
pub fn add_hole_chord(g: &Graph, hole: &[usize]) -> Option<(Graph, (usize, usize))> {
    if hole.len() < 4 {
        return None;
    }
    let (u, v) = (hole[0], hole[2]);
    if g.has_edge(u, v) {
        return None;
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.push((u.min(v), u.max(v)));
    Some((Graph::from_valid_edges(g.node_count(), edges), (u, v)))
}

impl Generated {
    pub fn log_json(&self) -> String {
        serde_json::to_string(&self.log).expect("build logs serialize")
    }
}

#[cfg(test)]
fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    use crate::graph::NodeSet;
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let set: NodeSet = cycle.iter().copied().collect();
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        let inside = g.neighbors(v).iter().filter(|&&w| set.contains(w)).count();
        inside == 2 && g.has_edge(v, cycle[(i + 1) % k])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replay_is_identical() {
        for seed in 0..20 {
            let gen = random_c_graph(seed, 40, &GenConfig::default());
            assert_eq!(replay(&gen.log).unwrap(), gen.graph);
            let back: BuildLog = serde_json::from_str(&gen.log_json()).unwrap();
            assert_eq!(back, gen.log);
        }
    }

    #[test]
    fn same_seed_same_graph() {
        let a = random_c_graph(7, 60, &GenConfig::default());
        let b = random_c_graph(7, 60, &GenConfig::default());
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.log, b.log);
    }

    #[test]
    fn outputs_are_connected_and_reach_target() {
        for seed in 0..20 {
            let g = random_c_graph(seed, 50, &GenConfig::default()).graph;
            assert!(g.is_connected());
            assert!(g.node_count() >= 50, "seed {seed}: {}", g.node_count());
        }
    }

    #[test]
    fn strongly_2_bipartite_pieces_have_the_right_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for size in 10..40 {
            let spec = random_strongly_2_bipartite(&mut rng, size);
            let g = spec.build();
            let BasicSpec::Strongly2Bipartite { y, .. } = spec else { unreachable!() };
            assert!((0..y).all(|v| g.degree(v) >= 3));
            assert!((y..g.node_count()).all(|v| g.degree(v) == 2));
            assert!(g.find_square().is_none());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn holes_found_are_chordless() {
        let p = make_petersen();
        let h = find_hole(&p, 5).unwrap();
        assert!(is_hole(&p, &h));
        let (mutated, (u, v)) = add_hole_chord(&p, &h).unwrap();
        assert!(mutated.has_edge(u, v));
        assert_eq!(mutated.edge_count(), 16);
        assert!(find_hole(&complete(5), 4).is_none());
    }
}
