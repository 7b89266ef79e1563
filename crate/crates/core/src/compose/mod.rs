//! Graph construction: fixed graphs, the gluing operations `O₀..O₃`,
//! random generation of class-C graphs and test fixtures.

mod fixed;
mod ops;
mod random;

pub use fixed::{make_heawood, make_petersen, petersen_ids};
pub use ops::{
    glue0, glue1, glue2, glue3, o2_candidates, op0_union, op1_glue, op2_glue, op3_glue,
    two_subdivision, ComposeError, Glued,
};
pub use random::{
    add_hole_chord, find_hole, random_c_graph, replay, BasicMix, BasicSpec, BuildLog, GenConfig,
    Generated, OpKind, OpMix, Step,
};

use crate::graph::named::cycle;
use crate::graph::Graph;

/// Four copies of the Petersen graph minus one node, glued around a square
/// with `O₂`. Triangle-free, in C, 36 nodes and 84 edges, and without a
/// stable set meeting every cycle.
pub fn make_no_transversal_fixture() -> Graph {
    let petersen = make_petersen();
    let mut g = cycle(4);
    // Current id of each square node s_i as nodes get renumbered.
    let mut square: Vec<usize> = (0..4).collect();
    for i in 0..4 {
        let glued = glue2(&g, square[i], &petersen, petersen_ids::a(1))
            .expect("square nodes and Petersen nodes have stable neighborhoods");
        for s in square.iter_mut().skip(i + 1) {
            *s = glued.map1[*s].expect("later square nodes survive");
        }
        g = glued.graph;
    }
    g
}
