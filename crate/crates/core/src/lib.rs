//! Recognition, decomposition, coloring and maximum clique for graphs that
//! contain no cycle with a unique chord.
//!
//! The entry points are [`decomp::recognize`], [`decomp::build_proper_tree`],
//! [`chromatic::optimal_coloring`] and [`chromatic::max_clique`]. The
//! [`oracle`] module holds brute-force reference implementations used to
//! test all of them.

pub mod chromatic;
pub mod compose;
pub mod decomp;
pub mod embed;
pub mod graph;
pub mod oracle;

pub use graph::{parse_edge_list, Graph, GraphError, NodeSet};
