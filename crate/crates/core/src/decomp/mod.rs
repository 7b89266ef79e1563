//! Basic-class detection, cutsets and 1-joins, blocks of decomposition,
//! proper decomposition trees and recognition of class C.

mod basic;
mod blocks;
mod cutsets;
mod join;
mod split;
mod tree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::GraphError;

pub use basic::{classify_basic, is_induced_subgraph_of_fixed, BasicKind, FixedGraph};
pub use blocks::{blocks, Block, BlockMode, Marker};
pub use cutsets::{find_1cutset, find_2cutset, find_proper_2cutset};
pub use join::{check_proper_1join, find_1join, OneJoin};
pub use split::Split;
pub use tree::{
    build_proper_tree, is_in_c, recognize, ComponentVerdict, DecompNode, DecompTree, NodeKind,
    Recognition,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has a 1-cutset at node {0}")]
    HasOneCutset(usize),
    #[error("graph is basic")]
    Basic,
    #[error("graph has a proper 1-join")]
    HasProperOneJoin,
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("invalid 1-join certificate: {0}")]
    InvalidCertificate(String),
}

/// Where the recognizer concluded that a graph is not in C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectStep {
    /// A 1-join whose special sets are not both stable.
    NonProperOneJoin,
    /// A path of degree-2 nodes whose two attachments are adjacent.
    AdjacentAttachments,
    /// No 2-cutset after contracting the isolated degree-2 nodes.
    NoTwoCutset,
    /// The 2-cutset found is an edge.
    AdjacentTwoCutset,
}

impl std::fmt::Display for RejectStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RejectStep::NonProperOneJoin => "1-join is not proper",
            RejectStep::AdjacentAttachments => "degree-2 path has adjacent attachments",
            RejectStep::NoTwoCutset => "no 2-cutset in the contracted graph",
            RejectStep::AdjacentTwoCutset => "2-cutset is an edge",
        };
        f.write_str(s)
    }
}

/// Checkable evidence accompanying a rejection, in ids of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// A triangle that meets both sides of a 1-join.
    Triangle { nodes: [usize; 3] },
    /// A path of degree-2 nodes attached to the adjacent nodes `a`, `b`.
    AttachedPath { a: usize, b: usize, path: Vec<usize> },
    /// Adjacent nodes whose removal disconnects the graph.
    AdjacentCutset { a: usize, b: usize },
}

/// Verdict that a graph contains a cycle with a unique chord.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotInC {
    pub step: RejectStep,
    /// Absent when the evidence involves marker nodes with no counterpart
    /// in the input, or when the step gives no local evidence.
    pub witness: Option<Witness>,
}

impl std::fmt::Display for NotInC {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "not in C: {}", self.step)
    }
}
