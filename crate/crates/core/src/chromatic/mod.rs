//! Admissible pairs, third colors, optimal coloring and maximum cliques.
//!
//! A third color is a stable set meeting every odd cycle, so removing it
//! leaves a bipartite graph; a strong third color meets every cycle and
//! leaves a forest. Triangle-free graphs in C always have one, which makes
//! them 3-colorable.

mod basic;
mod coloring;
mod third;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomp::NotInC;
use crate::graph::{Graph, GraphError, NodeSet};

pub use basic::{strong_third_color_basic, third_color_petersen};
pub use coloring::{max_clique, optimal_coloring, optimal_coloring_observed};
pub use third::{strong_third_color_type2, third_color, third_color_observed};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    NotInC(NotInC),
    #[error("pair is not admissible: {0}")]
    NotAdmissible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A constraint `(R, T)` around `center`: a third color must contain `T`
/// and avoid `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissiblePair {
    pub center: usize,
    pub r: NodeSet,
    pub t: NodeSet,
    /// 1: `T = N(v)`, `R = {v}`. 2: `T = ∅`, `R = N[v]`. For `v` of degree
    /// two with `N(v) = {u, w}`: 3: `T = {u}`, `R = {v, w}`; 4: `T = {u}`,
    /// `R = N[w]`; 5: `T = ∅`, `R = {u} ∪ N[w]`.
    pub case: u8,
    /// The neighbor playing `u` in cases 3 to 5.
    pub u: Option<usize>,
}

impl AdmissiblePair {
    /// Pair of the given case around `v`; `u` picks the neighbor playing
    /// `u` in cases 3 to 5 and is ignored otherwise.
    pub fn new(g: &Graph, v: usize, case: u8, u: Option<usize>) -> Result<Self, ColorError> {
        g.check_node(v)?;
        let mut tagged = None;
        let (r, t) = match case {
            1 => (NodeSet::singleton(v), g.neighborhood(v)),
            2 => (g.closed_neighborhood(v), NodeSet::new()),
            3..=5 => {
                let nv = g.neighbors(v);
                let u = u.ok_or_else(|| ColorError::NotAdmissible("missing u".into()))?;
                if nv.len() != 2 || !nv.contains(&u) {
                    return Err(ColorError::NotAdmissible(format!(
                        "case {case} needs {v} of degree two next to {u}"
                    )));
                }
                let w = if nv[0] == u { nv[1] } else { nv[0] };
                tagged = Some(u);
                match case {
                    3 => ([v, w].into(), NodeSet::singleton(u)),
                    4 => (g.closed_neighborhood(w), NodeSet::singleton(u)),
                    _ => {
                        let mut r = g.closed_neighborhood(w);
                        r.insert(u);
                        (r, NodeSet::new())
                    }
                }
            }
            _ => return Err(ColorError::NotAdmissible(format!("no case {case}"))),
        };
        Ok(AdmissiblePair { center: v, r, t, case, u: tagged })
    }

    /// The neighbors `(u, w)` of a degree-2 center in cases 3 to 5.
    pub(crate) fn uw(&self, g: &Graph) -> Option<(usize, usize)> {
        let u = self.u?;
        let nv = g.neighbors(self.center);
        Some((u, if nv[0] == u { nv[1] } else { nv[0] }))
    }
}

/// All admissible pairs around `v`: cases 1 and 2, then for a degree-2 `v`
/// cases 3, 4 and 5, each with `u` the smaller then the larger neighbor.
pub fn admissible_pairs(g: &Graph, v: usize) -> Result<Vec<AdmissiblePair>, ColorError> {
    g.check_node(v)?;
    let mut out = vec![AdmissiblePair::new(g, v, 1, None)?, AdmissiblePair::new(g, v, 2, None)?];
    if let [p, q] = *g.neighbors(v) {
        for case in 3..=5 {
            for u in [p, q] {
                out.push(AdmissiblePair::new(g, v, case, Some(u))?);
            }
        }
    }
    Ok(out)
}

/// The admissible pair with exactly these sets around one of `centers`.
pub(crate) fn identify(
    g: &Graph,
    r: &NodeSet,
    t: &NodeSet,
    centers: &[usize],
) -> Result<AdmissiblePair, ColorError> {
    for &c in centers {
        if c >= g.node_count() || !r.contains(c) {
            continue;
        }
        if let Some(p) = admissible_pairs(g, c)?.into_iter().find(|p| &p.r == r && &p.t == t) {
            return Ok(p);
        }
    }
    Err(ColorError::NotAdmissible(format!("R = {:?}, T = {:?}", r.as_slice(), t.as_slice())))
}

pub(crate) fn check_pair(g: &Graph, pair: &AdmissiblePair) -> Result<(), ColorError> {
    identify(g, &pair.r, &pair.t, &[pair.center]).map(|_| ())
}

/// Whether `G − s` has no cycle.
pub(crate) fn is_forest_without(g: &Graph, s: &NodeSet) -> bool {
    let mut parent: Vec<usize> = g.nodes().collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if s.contains(u) || s.contains(v) {
            continue;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Stable set `s`; strong when `G − S` is a forest, weak when it is only
/// known to be bipartite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThirdColor {
    pub s: NodeSet,
    pub strong: bool,
}

/// A proper coloring with colors `1..=num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// `color[v]` for every node `v`.
    pub color: Vec<usize>,
    pub num_colors: usize,
}

/// A third color produced while coloring, with the graph and constraint it
/// answers.
#[derive(Debug, Clone, Copy)]
pub struct ThirdColorEvent<'a> {
    pub graph: &'a Graph,
    pub pair: &'a AdmissiblePair,
    pub color: &'a ThirdColor,
}
