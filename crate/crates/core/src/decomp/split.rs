use serde::{Deserialize, Serialize};

use crate::graph::{Graph, NodeSet};

/// Witness of one of the three decompositions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Split {
    OneCutset { x: NodeSet, y: NodeSet, v: usize },
    ProperOneJoin { x: NodeSet, y: NodeSet, a: NodeSet, b: NodeSet },
    ProperTwoCutset { x: NodeSet, y: NodeSet, a: usize, b: usize },
}

impl Split {
    pub fn x(&self) -> &NodeSet {
        match self {
            Split::OneCutset { x, .. }
            | Split::ProperOneJoin { x, .. }
            | Split::ProperTwoCutset { x, .. } => x,
        }
    }

    pub fn y(&self) -> &NodeSet {
        match self {
            Split::OneCutset { y, .. }
            | Split::ProperOneJoin { y, .. }
            | Split::ProperTwoCutset { y, .. } => y,
        }
    }

    /// Checks the defining conditions against `g`, naming the first failure.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.node_count();
        let mut side = vec![0u8; n];
        let mut mark = |s: &NodeSet, tag: u8| -> Result<(), String> {
            for v in s {
                if v >= n {
                    return Err(format!("node {v} out of range"));
                }
                if side[v] != 0 {
                    return Err(format!("node {v} appears twice"));
                }
                side[v] = tag;
            }
            Ok(())
        };
        mark(self.x(), 1)?;
        mark(self.y(), 2)?;
        let extra: Vec<usize> = match self {
            Split::OneCutset { v, .. } => vec![*v],
            Split::ProperOneJoin { .. } => vec![],
            Split::ProperTwoCutset { a, b, .. } => vec![*a, *b],
        };
        mark(&extra.iter().copied().collect(), 3)?;
        if let Some(v) = side.iter().position(|&s| s == 0) {
            return Err(format!("node {v} is in no part"));
        }
        match self {
            Split::OneCutset { x, y, .. } => {
                if x.is_empty() || y.is_empty() {
                    return Err("empty side".into());
                }
                if let Some((u, w)) = cross_edge(g, x, &side) {
                    return Err(format!("edge {u}-{w} crosses the cutset"));
                }
            }
            Split::ProperOneJoin { x, y, a, b } => {
                if x.len() < 2 || y.len() < 2 {
                    return Err("a side has fewer than two nodes".into());
                }
                if a.len() < 2 || b.len() < 2 {
                    return Err("a special set has fewer than two nodes".into());
                }
                if !a.is_subset(x) || !b.is_subset(y) {
                    return Err("special set outside its side".into());
                }
                if !g.is_stable(a) || !g.is_stable(b) {
                    return Err("special set is not stable".into());
                }
                for u in x {
                    for &w in g.neighbors(u) {
                        if side[w] == 2 && !(a.contains(u) && b.contains(w)) {
                            return Err(format!("edge {u}-{w} outside A-B"));
                        }
                    }
                }
                for u in a {
                    for w in b {
                        if !g.has_edge(u, w) {
                            return Err(format!("missing A-B edge {u}-{w}"));
                        }
                    }
                }
            }
            Split::ProperTwoCutset { x, y, a, b } => {
                if x.len() < 2 || y.len() < 2 {
                    return Err("a side has fewer than two nodes".into());
                }
                if g.has_edge(*a, *b) {
                    return Err("a and b are adjacent".into());
                }
                if g.degree(*a) < 3 || g.degree(*b) < 3 {
                    return Err("a or b has degree below three".into());
                }
                if let Some((u, w)) = cross_edge(g, x, &side) {
                    return Err(format!("edge {u}-{w} crosses the cutset"));
                }
                for s in [x, y] {
                    if !has_path_through(g, s, *a, *b) {
                        return Err("a side carries no ab-path".into());
                    }
                }
            }
        }
        Ok(())
    }
}

fn cross_edge(g: &Graph, x: &NodeSet, side: &[u8]) -> Option<(usize, usize)> {
    x.iter()
        .flat_map(|u| g.neighbors(u).iter().map(move |&w| (u, w)))
        .find(|&(_, w)| side[w] == 2)
}

/// Whether `a` reaches `b` with all interior nodes in `inside`.
fn has_path_through(g: &Graph, inside: &NodeSet, a: usize, b: usize) -> bool {
    let mut seen = vec![false; g.node_count()];
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if w == b {
                return true;
            }
            if !seen[w] && inside.contains(w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}
