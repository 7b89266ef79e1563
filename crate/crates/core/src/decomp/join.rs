use serde::{Deserialize, Serialize};

use super::{DecompError, NotInC, RejectStep, Split, Witness};
use crate::graph::{Graph, NodeSet};

/// A 1-join `(X, Y, A, B)`, not necessarily proper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneJoin {
    pub x: NodeSet,
    pub y: NodeSet,
    pub a: NodeSet,
    pub b: NodeSet,
}

impl OneJoin {
    fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.node_count();
        if self.x.len() < 2 || self.y.len() < 2 {
            return Err("a side has fewer than two nodes".into());
        }
        if self.x.len() + self.y.len() != n || !self.x.is_disjoint(&self.y) {
            return Err("sides do not partition the nodes".into());
        }
        if self.a.is_empty() || self.b.is_empty() {
            return Err("empty special set".into());
        }
        if !self.a.is_subset(&self.x) || !self.b.is_subset(&self.y) {
            return Err("special set outside its side".into());
        }
        for u in &self.x {
            for &w in g.neighbors(u) {
                let cross = self.y.contains(w);
                if cross && !(self.a.contains(u) && self.b.contains(w)) {
                    return Err(format!("edge {u}-{w} outside A-B"));
                }
            }
        }
        for u in &self.a {
            if self.b.iter().any(|w| !g.has_edge(u, w)) {
                return Err(format!("node {u} of A misses part of B"));
            }
        }
        Ok(())
    }
}

/// Some 1-join of `g`, or `None`.
///
/// Expects a connected graph without a 1-cutset. Then both special sets of
/// any 1-join have two or more nodes, so every 1-join contains adjacent
/// `a ∈ A`, `b ∈ B` and some `x ∈ A − a` with `b` and another node of `B`
/// as common neighbors of `a` and `x`. For each such seed the smallest
/// side `X ⊇ {a, x}` avoiding `b` is grown by closure: a node `z` outside
/// `X` must join `X` whenever, for some `u ∈ X`, `zu ∈ E` disagrees with
/// `ub ∈ E ∧ za ∈ E`.
pub fn find_1join(g: &Graph) -> Option<OneJoin> {
    let n = g.node_count();
    if n < 4 {
        return None;
    }
    let mut c = Closure::new(n);
    let mut common = vec![0usize; n];
    for a in g.nodes() {
        c.set_anchor(g, a);
        // Number of common neighbors of `a` with every node at distance 2.
        let mut reached = Vec::new();
        for &z in g.neighbors(a) {
            for &x in g.neighbors(z) {
                if x != a {
                    if common[x] == 0 {
                        reached.push(x);
                    }
                    common[x] += 1;
                }
            }
        }
        let mut found = None;
        'seeds: for &b in g.neighbors(a) {
            for &x in g.neighbors(b) {
                if x == a || common[x] < 2 {
                    continue;
                }
                if let Some(join) = c.grow(g, a, b, x) {
                    found = Some(join);
                    break 'seeds;
                }
            }
        }
        for x in reached {
            common[x] = 0;
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Reusable buffers for the closure computation.
struct Closure {
    in_x: Vec<bool>,
    adj_a: Vec<bool>,
    anchor: Option<usize>,
    members: Vec<usize>,
    queue: Vec<usize>,
}

impl Closure {
    fn new(n: usize) -> Self {
        Closure {
            in_x: vec![false; n],
            adj_a: vec![false; n],
            anchor: None,
            members: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn set_anchor(&mut self, g: &Graph, a: usize) {
        if let Some(old) = self.anchor.replace(a) {
            for &z in g.neighbors(old) {
                self.adj_a[z] = false;
            }
        }
        for &z in g.neighbors(a) {
            self.adj_a[z] = true;
        }
    }

    fn add(&mut self, z: usize) {
        if !self.in_x[z] {
            self.in_x[z] = true;
            self.members.push(z);
            self.queue.push(z);
        }
    }

    fn grow(&mut self, g: &Graph, a: usize, b: usize, x: usize) -> Option<OneJoin> {
        let n = g.node_count();
        self.add(a);
        self.add(x);
        let mut ok = true;
        while let Some(u) = self.queue.pop() {
            if self.in_x[b] {
                ok = false;
                break;
            }
            if g.has_edge(u, b) {
                // N(u) and N(a) must agree outside X.
                for &z in g.neighbors(u) {
                    if !self.in_x[z] && !self.adj_a[z] {
                        self.add(z);
                    }
                }
                for &z in g.neighbors(a) {
                    if !self.in_x[z] && !g.has_edge(z, u) {
                        self.add(z);
                    }
                }
            } else {
                for &z in g.neighbors(u) {
                    self.add(z);
                }
            }
            if self.members.len() + 2 > n {
                ok = false;
                break;
            }
        }
        ok &= !self.in_x[b] && self.members.len() + 2 <= n;
        let result = ok.then(|| {
            let x: NodeSet = self.members.iter().copied().collect();
            let y: NodeSet = g.nodes().filter(|&v| !self.in_x[v]).collect();
            let a_set = x.iter().filter(|&u| g.has_edge(u, b)).collect();
            let b_set = y.iter().filter(|&w| self.adj_a[w]).collect();
            OneJoin { x, y, a: a_set, b: b_set }
        });
        for &v in &self.members {
            self.in_x[v] = false;
        }
        self.members.clear();
        self.queue.clear();
        result
    }
}

/// Turns a 1-join of a non-clique graph without 1-cutset into a proper
/// split, or a rejection when a special set contains an edge.
pub fn check_proper_1join(g: &Graph, join: &OneJoin) -> Result<Result<Split, NotInC>, DecompError> {
    join.check(g).map_err(DecompError::InvalidCertificate)?;
    if join.a.len() < 2 || join.b.len() < 2 {
        return Err(DecompError::InvalidCertificate(
            "a special set of size one is a 1-cutset".into(),
        ));
    }
    Ok(properness(g, join))
}

pub(crate) fn properness(g: &Graph, join: &OneJoin) -> Result<Split, NotInC> {
    for (inside, other) in [(&join.a, &join.b), (&join.b, &join.a)] {
        for u in inside {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| v > u && inside.contains(v)) {
                let w = other.first().expect("special sets are nonempty");
                let mut nodes = [u, v, w];
                nodes.sort_unstable();
                return Err(NotInC {
                    step: RejectStep::NonProperOneJoin,
                    witness: Some(Witness::Triangle { nodes }),
                });
            }
        }
    }
    Ok(Split::ProperOneJoin {
        x: join.x.clone(),
        y: join.y.clone(),
        a: join.a.clone(),
        b: join.b.clone(),
    })
}
