use super::basic::{petersen_weak, strong_basic};
use super::{check_pair, identify, AdmissiblePair, ColorError, ThirdColor, ThirdColorEvent};
use crate::decomp::{BasicKind, DecompNode, DecompTree, NodeKind, Split};
use crate::graph::{Graph, NodeSet};

/// Third color `S` of tree node `id` with `T ⊆ S` and `S ∩ R = ∅`.
///
/// The node must be triangle-free. Leaves use the basic constructions,
/// type-1 nodes combine third colors of their blocks, and type-2 nodes
/// switch to strong third colors.
pub fn third_color(tree: &DecompTree, id: usize, pair: &AdmissiblePair) -> Result<ThirdColor, ColorError> {
    third_color_observed(tree, id, pair, &mut |_| {})
}

/// [`third_color`], reporting the answer at every tree node visited.
pub fn third_color_observed(
    tree: &DecompTree,
    id: usize,
    pair: &AdmissiblePair,
    observer: &mut dyn FnMut(ThirdColorEvent<'_>),
) -> Result<ThirdColor, ColorError> {
    let g = &node(tree, id)?.graph;
    check_pair(g, pair)?;
    if g.find_triangle().is_some() {
        return Err(ColorError::Precondition("graph has a triangle".into()));
    }
    run(tree, id, pair.clone(), false, observer)
}

/// Strong third color of a type-2 node or of a leaf below one.
pub fn strong_third_color_type2(
    tree: &DecompTree,
    id: usize,
    pair: &AdmissiblePair,
) -> Result<ThirdColor, ColorError> {
    let nd = node(tree, id)?;
    check_pair(&nd.graph, pair)?;
    if let NodeKind::Type1(_) = nd.kind {
        return Err(ColorError::Precondition("node is of type 1".into()));
    }
    run(tree, id, pair.clone(), true, &mut |_| {})
}

fn node(tree: &DecompTree, id: usize) -> Result<&DecompNode, ColorError> {
    tree.nodes
        .get(id)
        .ok_or_else(|| ColorError::Precondition(format!("no tree node {id}")))
}

/// Id in `child` of the parent node `p`.
fn down(child: &DecompNode, p: usize) -> Option<usize> {
    let real = child.to_parent.iter().take_while(|x| x.is_some()).count();
    child.to_parent[..real].binary_search_by(|x| x.expect("prefix is real").cmp(&p)).ok()
}

fn down_set(child: &DecompNode, s: &NodeSet) -> Option<NodeSet> {
    s.iter().map(|p| down(child, p)).collect()
}

fn up(child: &DecompNode, s: &NodeSet) -> NodeSet {
    s.iter().filter_map(|i| child.to_parent[i]).collect()
}

fn marker(child: &DecompNode) -> usize {
    child.marker.expect("blocks of this split carry a marker").node
}

fn internal(what: &str) -> ColorError {
    ColorError::Precondition(format!("pair fits no case of the {what}"))
}

/// What a split node does with the answer of its first child.
enum Plan {
    /// The second pair does not depend on the first answer.
    Fixed(AdmissiblePair),
    /// Only the first block is constrained; the second must agree on the
    /// cut vertex.
    CutVertex { z_first: usize, z_second: usize },
    /// The second block's constraint follows the first block's marker `y`.
    Join { y: usize, x: usize },
    /// The center has degree two next to the cutset node `w`; the second
    /// block must agree on the other cutset node `o`.
    NextToCutset { o_first: usize, c: usize, o: usize },
    /// The pair lives on the first side.
    OneSide { c_first: usize, real: bool, a_first: usize, b_first: usize, c: usize, a: usize, b: usize },
}

enum Start {
    Done(ThirdColor),
    Split { first: usize, pair: AdmissiblePair, second: usize, plan: Plan },
}

struct Frame {
    id: usize,
    pair: AdmissiblePair,
    first: usize,
    second: usize,
    plan: Plan,
    child_strong: bool,
    s_first: Option<NodeSet>,
}

fn run(
    tree: &DecompTree,
    id: usize,
    pair: AdmissiblePair,
    strong: bool,
    observer: &mut dyn FnMut(ThirdColorEvent<'_>),
) -> Result<ThirdColor, ColorError> {
    let mut frames: Vec<Frame> = Vec::new();
    let mut request = Some((id, pair, strong));
    let mut answer: Option<ThirdColor> = None;
    loop {
        if let Some((id, pair, strong)) = request.take() {
            let nd = &tree.nodes[id];
            match start(tree, nd, &pair, strong)? {
                Start::Done(tc) => {
                    observer(ThirdColorEvent { graph: &nd.graph, pair: &pair, color: &tc });
                    answer = Some(tc);
                }
                Start::Split { first, pair: p1, second, plan } => {
                    let child_strong = matches!(nd.kind, NodeKind::Type2(_));
                    frames.push(Frame { id, pair, first, second, plan, child_strong, s_first: None });
                    request = Some((first, p1, child_strong));
                    continue;
                }
            }
        }
        let tc = answer.take().expect("an answer is ready");
        let Some(top) = frames.last_mut() else {
            return Ok(tc);
        };
        if top.s_first.is_none() {
            let p2 = second_pair(tree, top, &tc.s)?;
            top.s_first = Some(tc.s);
            request = Some((top.second, p2, top.child_strong));
            continue;
        }
        let f = frames.pop().expect("frame is on the stack");
        let s1 = f.s_first.expect("first answer recorded");
        let s = up(&tree.nodes[f.first], &s1).union(&up(&tree.nodes[f.second], &tc.s));
        let tc = ThirdColor { s, strong: f.child_strong };
        let nd = &tree.nodes[f.id];
        observer(ThirdColorEvent { graph: &nd.graph, pair: &f.pair, color: &tc });
        answer = Some(tc);
    }
}

fn start(tree: &DecompTree, nd: &DecompNode, pair: &AdmissiblePair, strong: bool) -> Result<Start, ColorError> {
    match &nd.kind {
        NodeKind::Leaf(BasicKind::PetersenSub { embedding }) if embedding.len() == 10 && !strong => {
            Ok(Start::Done(petersen_weak(&nd.graph, embedding, pair)?))
        }
        NodeKind::Leaf(kind) => Ok(Start::Done(ThirdColor { s: strong_basic(&nd.graph, kind, pair)?, strong: true })),
        NodeKind::Type1(_) if strong => Err(ColorError::Precondition(
            "type-1 node below a type-2 node".into(),
        )),
        NodeKind::Type1(Split::OneCutset { x, y, v }) => cutset_start(tree, nd, pair, x, y, *v),
        NodeKind::Type1(Split::ProperOneJoin { x, y, a, b }) => join_start(tree, nd, pair, x, y, a, b),
        NodeKind::Type2(Split::ProperTwoCutset { x, y, a, b }) => two_cutset_start(tree, nd, pair, x, y, *a, *b),
        NodeKind::Type1(_) | NodeKind::Type2(_) => Err(internal("tree")),
    }
}

fn cutset_start(
    tree: &DecompTree,
    nd: &DecompNode,
    pair: &AdmissiblePair,
    x: &NodeSet,
    y: &NodeSet,
    z: usize,
) -> Result<Start, ColorError> {
    let g = &nd.graph;
    let (cx, cy) = (nd.children[0], nd.children[1]);
    let touches = |side: &NodeSet| pair.r.iter().chain(pair.t.iter()).any(|p| side.contains(p));
    let mut hints = vec![pair.center, z];
    hints.extend(g.neighbors(pair.center).iter().copied().filter(|_| g.degree(pair.center) == 2));
    let restrict = |child: usize, side: &NodeSet| -> Result<AdmissiblePair, ColorError> {
        let c = &tree.nodes[child];
        let keep = |s: &NodeSet| s.iter().filter(|&p| p == z || side.contains(p)).collect::<NodeSet>();
        let r = down_set(c, &keep(&pair.r)).ok_or_else(|| internal("1-cutset"))?;
        let t = down_set(c, &keep(&pair.t)).ok_or_else(|| internal("1-cutset"))?;
        let centers: Vec<usize> = hints.iter().filter_map(|&h| down(c, h)).collect();
        identify(&c.graph, &r, &t, &centers)
    };
    if touches(x) && touches(y) {
        let first = restrict(cx, x)?;
        let second = restrict(cy, y)?;
        return Ok(Start::Split { first: cx, pair: first, second: cy, plan: Plan::Fixed(second) });
    }
    let (first, second, side) = if touches(y) { (cy, cx, y) } else { (cx, cy, x) };
    let p1 = restrict(first, side)?;
    let plan = Plan::CutVertex {
        z_first: down(&tree.nodes[first], z).expect("cut vertex in both blocks"),
        z_second: down(&tree.nodes[second], z).expect("cut vertex in both blocks"),
    };
    Ok(Start::Split { first, pair: p1, second, plan })
}

#[allow(clippy::too_many_arguments)]
fn join_start(
    tree: &DecompTree,
    nd: &DecompNode,
    pair: &AdmissiblePair,
    x: &NodeSet,
    y: &NodeSet,
    a: &NodeSet,
    b: &NodeSet,
) -> Result<Start, ColorError> {
    let g = &nd.graph;
    let v = pair.center;
    let on_x = match *g.neighbors(v) {
        [u, w] => {
            if [u, v, w].iter().all(|&p| x.contains(p)) {
                true
            } else if [u, v, w].iter().all(|&p| y.contains(p)) {
                false
            } else {
                b.contains(v)
            }
        }
        _ => x.contains(v),
    };
    let (first, second, side, opposite) =
        if on_x { (nd.children[0], nd.children[1], x, b) } else { (nd.children[1], nd.children[0], y, a) };
    let block = &tree.nodes[first];
    let y_marker = marker(block);
    let phi = |p: usize| {
        if side.contains(p) {
            down(block, p)
        } else if opposite.contains(p) {
            Some(y_marker)
        } else {
            None
        }
    };
    let map = |s: &NodeSet| s.iter().map(phi).collect::<Option<NodeSet>>().ok_or_else(|| internal("1-join"));
    let (r, t) = (map(&pair.r)?, map(&pair.t)?);
    let centers: Vec<usize> = phi(v).into_iter().collect();
    let p1 = identify(&block.graph, &r, &t, &centers)?;
    let plan = Plan::Join { y: y_marker, x: marker(&tree.nodes[second]) };
    Ok(Start::Split { first, pair: p1, second, plan })
}

#[allow(clippy::too_many_arguments)]
fn two_cutset_start(
    tree: &DecompTree,
    nd: &DecompNode,
    pair: &AdmissiblePair,
    x: &NodeSet,
    y: &NodeSet,
    a: usize,
    b: usize,
) -> Result<Start, ColorError> {
    let g = &nd.graph;
    let v = pair.center;
    let (cx, cy) = (nd.children[0], nd.children[1]);
    let (bx, by) = (&tree.nodes[cx], &tree.nodes[cy]);
    let at = |c: &DecompNode, p: usize| down(c, p).expect("cutset nodes lie in both blocks");

    if v == a || v == b {
        let o = if v == a { b } else { a };
        let make = |c: &DecompNode| match pair.case {
            1 => AdmissiblePair::new(&c.graph, at(c, v), 1, None),
            2 => AdmissiblePair::new(&c.graph, marker(c), 4, Some(at(c, o))),
            _ => Err(internal("2-cutset")),
        };
        return Ok(Start::Split { first: cx, pair: make(bx)?, second: cy, plan: Plan::Fixed(make(by)?) });
    }

    if let (4 | 5, Some((u, w))) = (pair.case, pair.uw(g)) {
        if w == a || w == b {
            let o = if w == a { b } else { a };
            let (f, s) = if x.contains(v) { (cx, cy) } else { (cy, cx) };
            let (first, second) = (&tree.nodes[f], &tree.nodes[s]);
            let p1 = AdmissiblePair::new(&first.graph, at(first, v), pair.case, Some(at(first, u)))?;
            let plan = Plan::NextToCutset { o_first: at(first, o), c: marker(second), o: at(second, o) };
            return Ok(Start::Split { first: f, pair: p1, second: s, plan });
        }
    }

    let within = |side: &NodeSet| {
        pair.r.iter().chain(pair.t.iter()).all(|p| p == a || p == b || side.contains(p))
    };
    let (f, s) = if within(x) {
        (cx, cy)
    } else if within(y) {
        (cy, cx)
    } else {
        return Err(internal("2-cutset"));
    };
    let (first, second) = (&tree.nodes[f], &tree.nodes[s]);
    let r = down_set(first, &pair.r).ok_or_else(|| internal("2-cutset"))?;
    let t = down_set(first, &pair.t).ok_or_else(|| internal("2-cutset"))?;
    let p1 = identify(&first.graph, &r, &t, &[at(first, v)])?;
    let plan = Plan::OneSide {
        c_first: marker(first),
        real: first.marker.is_some_and(|m| m.is_real),
        a_first: at(first, a),
        b_first: at(first, b),
        c: marker(second),
        a: at(second, a),
        b: at(second, b),
    };
    Ok(Start::Split { first: f, pair: p1, second: s, plan })
}

fn second_pair(tree: &DecompTree, f: &Frame, s1: &NodeSet) -> Result<AdmissiblePair, ColorError> {
    let g: &Graph = &tree.nodes[f.second].graph;
    match f.plan {
        Plan::Fixed(ref p) => Ok(p.clone()),
        Plan::CutVertex { z_first, z_second } => {
            if s1.contains(z_first) {
                let nb = g.neighbors(z_second)[0];
                AdmissiblePair::new(g, nb, 1, None)
            } else {
                AdmissiblePair::new(g, z_second, 2, None)
            }
        }
        Plan::Join { y, x } => AdmissiblePair::new(g, x, if s1.contains(y) { 1 } else { 2 }, None),
        Plan::NextToCutset { o_first, c, o } => {
            AdmissiblePair::new(g, c, if s1.contains(o_first) { 4 } else { 5 }, Some(o))
        }
        Plan::OneSide { c_first, real, a_first, b_first, c, a, b } => {
            if real && s1.contains(c_first) {
                return AdmissiblePair::new(g, a, 1, None);
            }
            let mut r = NodeSet::singleton(c);
            let mut t = NodeSet::new();
            for (p_first, p) in [(a_first, a), (b_first, b)] {
                if s1.contains(p_first) {
                    t.insert(p);
                } else {
                    r.insert(p);
                }
            }
            identify(g, &r, &t, &[c])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{admissible_pairs, is_forest_without};
    use crate::compose::{glue1, make_no_transversal_fixture, make_petersen};
    use crate::decomp::build_proper_tree;
    use crate::graph::named::*;

    fn check(g: &Graph, pair: &AdmissiblePair, tc: &ThirdColor) {
        assert!(pair.t.is_subset(&tc.s), "{pair:?} {tc:?}");
        assert!(pair.r.is_disjoint(&tc.s), "{pair:?} {tc:?}");
        assert!(g.is_stable(&tc.s));
        let rest: NodeSet = g.nodes().filter(|&v| !tc.s.contains(v)).collect();
        assert!(g.induced_subgraph(&rest).unwrap().0.is_bipartite(), "{pair:?} {tc:?}");
        if tc.strong {
            assert!(is_forest_without(g, &tc.s), "{pair:?} {tc:?}");
        }
    }

    fn all_pairs_everywhere(g: &Graph) -> usize {
        let tree = build_proper_tree(g).unwrap().unwrap();
        let mut events = 0;
        for v in g.nodes() {
            for pair in admissible_pairs(g, v).unwrap() {
                let tc = third_color_observed(&tree, 0, &pair, &mut |e| {
                    check(e.graph, e.pair, e.color);
                    events += 1;
                })
                .unwrap();
                check(g, &pair, &tc);
            }
        }
        events
    }

    #[test]
    fn theta_strong_with_closed_neighborhood() {
        let g = theta(&[3, 3, 3, 3]);
        let tree = build_proper_tree(&g).unwrap().unwrap();
        let pair = AdmissiblePair::new(&g, 0, 2, None).unwrap();
        let tc = strong_third_color_type2(&tree, 0, &pair).unwrap();
        assert!(tc.strong && tc.s.contains(1));
        check(&g, &pair, &tc);
        assert!(all_pairs_everywhere(&g) > 0);
    }

    #[test]
    fn two_petersens_through_a_cut_vertex() {
        let p = make_petersen();
        let g = glue1(&p, 0, &p, 0).unwrap().graph;
        assert!(all_pairs_everywhere(&g) > 0);
    }

    #[test]
    fn fixture_has_weak_third_colors() {
        let g = make_no_transversal_fixture();
        let tree = build_proper_tree(&g).unwrap().unwrap();
        let pair = AdmissiblePair::new(&g, 0, 2, None).unwrap();
        let tc = third_color(&tree, 0, &pair).unwrap();
        check(&g, &pair, &tc);
        all_pairs_everywhere(&g);
    }

    #[test]
    fn joins_and_squares() {
        for g in [cycle(4), complete_bipartite(2, 3), complete_bipartite(3, 3), theta(&[2, 2, 3, 4])] {
            all_pairs_everywhere(&g);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = bowtie();
        let tree = build_proper_tree(&g).unwrap().unwrap();
        let pair = AdmissiblePair::new(&g, 0, 2, None).unwrap();
        assert!(matches!(third_color(&tree, 0, &pair), Err(ColorError::Precondition(_))));
        let c5 = cycle(5);
        let tree = build_proper_tree(&c5).unwrap().unwrap();
        let bogus = AdmissiblePair { center: 0, r: [0].into(), t: NodeSet::new(), case: 1, u: None };
        assert!(matches!(third_color(&tree, 0, &bogus), Err(ColorError::NotAdmissible(_))));
    }
}
