//! Construction of treelike snarks from tree specifications, location of
//! near leaves, and the one-leaf reduction that drives the induction.

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Graph, VertexId};
use crate::pole::{DanglingRole, PetersenPole, PoleAtlas};
use crate::tree::TreeSpec;

/// One embedded Petersen 4-pole: the circuit edge it replaces and the map
/// from canonical pole vertices to vertex ids in the snark.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleInstance {
    /// Leaf preceding the circuit edge in clockwise order.
    pub pred: VertexId,
    /// Leaf following it.
    pub succ: VertexId,
    /// Canonical pole vertex k maps to `verts[k]` in the snark.
    pub verts: [VertexId; 8],
}

impl PoleInstance {
    pub fn boundary(&self, pole: &PetersenPole, role: DanglingRole) -> VertexId {
        self.verts[pole.boundary(role).index()]
    }
}

/// A treelike snark with its construction annotations: connector pairs per
/// leaf and one pole instance per circuit edge, both in leaf-cycle order.
#[derive(Debug, Clone)]
pub struct TreelikeSnark {
    pub graph: CubicGraph,
    pub tree: TreeSpec,
    connectors: Vec<(VertexId, VertexId, VertexId)>,
    poles: Vec<PoleInstance>,
}

impl TreelikeSnark {
    /// Connector pair (x1, x2) of a leaf.
    pub fn connectors_of(&self, leaf: VertexId) -> Option<(VertexId, VertexId)> {
        self.connectors
            .iter()
            .find(|&&(l, _, _)| l == leaf)
            .map(|&(_, a, b)| (a, b))
    }

    pub fn poles(&self) -> &[PoleInstance] {
        &self.poles
    }

    pub fn pole_between(&self, x: VertexId, y: VertexId) -> Option<&PoleInstance> {
        self.poles.iter().find(|p| p.pred == x && p.succ == y)
    }

    pub fn pole_before(&self, leaf: VertexId) -> Option<&PoleInstance> {
        self.poles.iter().find(|p| p.succ == leaf)
    }

    pub fn pole_after(&self, leaf: VertexId) -> Option<&PoleInstance> {
        self.poles.iter().find(|p| p.pred == leaf)
    }

    /// Text export of the construction annotations.
    pub fn annotations(&self) -> String {
        let pole = PoleAtlas::get().pole();
        let mut out = String::new();
        for &(leaf, x1, x2) in &self.connectors {
            out.push_str(&format!("conn {leaf} {x1} {x2}\n"));
        }
        for p in &self.poles {
            out.push_str(&format!(
                "pole {} {} {} {} {} {}\n",
                p.pred,
                p.succ,
                p.boundary(pole, DanglingRole::L1),
                p.boundary(pole, DanglingRole::L2),
                p.boundary(pole, DanglingRole::R1),
                p.boundary(pole, DanglingRole::R2),
            ));
        }
        out
    }
}

/// Builds the treelike snark over a tree specification: every leaf gets two
/// connector vertices, every circuit edge is replaced by a Petersen 4-pole
/// whose left dangling edges join the predecessor's connectors and right
/// dangling edges the successor's.
pub fn build(tree: &TreeSpec) -> TreelikeSnark {
    let pole = PoleAtlas::get().pole();
    let nt = tree.n();
    let cycle = tree.leaf_cycle().to_vec();
    let leaves = cycle.len();

    let mut g = Graph::new(nt + 2 * leaves + 8 * leaves);
    for (u, v) in tree.edges() {
        g.add_edge(u, v).expect("tree edge");
    }
    let mut connectors = Vec::with_capacity(leaves);
    let mut next = nt;
    for &x in &cycle {
        let (x1, x2) = (VertexId::from(next), VertexId::from(next + 1));
        next += 2;
        g.add_edge(x, x1).expect("connector edge");
        g.add_edge(x, x2).expect("connector edge");
        connectors.push((x, x1, x2));
    }
    let conn_of = |leaf: VertexId| -> (VertexId, VertexId) {
        connectors
            .iter()
            .find(|&&(l, _, _)| l == leaf)
            .map(|&(_, a, b)| (a, b))
            .expect("every leaf has connectors")
    };
    let mut poles = Vec::with_capacity(leaves);
    for i in 0..leaves {
        let (x, y) = (cycle[i], cycle[(i + 1) % leaves]);
        let verts: [VertexId; 8] = std::array::from_fn(|k| VertexId::from(next + k));
        next += 8;
        for &(a, b) in pole.pole.inner_edges() {
            g.add_edge(verts[a.index()], verts[b.index()])
                .expect("pole edge");
        }
        let (x1, x2) = conn_of(x);
        let (y1, y2) = conn_of(y);
        for (role, target) in [
            (DanglingRole::L1, x1),
            (DanglingRole::L2, x2),
            (DanglingRole::R1, y1),
            (DanglingRole::R2, y2),
        ] {
            g.add_edge(verts[pole.boundary(role).index()], target)
                .expect("dangling join");
        }
        poles.push(PoleInstance {
            pred: x,
            succ: y,
            verts,
        });
    }
    debug_assert_eq!(next, g.n());
    let graph = CubicGraph::new(g).expect("construction is cubic");
    assert_eq!(
        crate::graph::is_bridgeless(graph.graph()),
        Ok(true),
        "construction must be bridgeless"
    );
    TreelikeSnark {
        graph,
        tree: tree.clone(),
        connectors,
        poles,
    }
}

/// Finds consecutive near leaves: a pair adjacent in the leaf cycle with a
/// common tree neighbour. Deterministic tie-break by least leaf index, then
/// least partner. Fails with a diagnostic when the cyclic order admits no
/// such pair (it is then not consistent with a planar embedding).
pub fn find_near_leaves(tree: &TreeSpec) -> Result<(VertexId, VertexId, VertexId)> {
    let cycle = tree.leaf_cycle();
    let mut best: Option<(VertexId, VertexId, VertexId)> = None;
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let u = tree.leaf_neighbour(x);
        if u != tree.leaf_neighbour(y) {
            continue;
        }
        let key = |x: VertexId, y: VertexId| (x.min(y), x.max(y));
        if best.is_none() || key(x, y) < key(best.unwrap().0, best.unwrap().1) {
            best = Some((x, y, u));
        }
    }
    best.ok_or(Error::NoNearLeaves)
}

/// Bookkeeping connecting a snark G to its one-leaf-smaller reduct G':
/// the deleted roles in G, the fresh roles in G', and the vertex
/// correspondence between the untouched parts.
#[derive(Debug, Clone)]
pub struct ReductionFrame {
    pub snark: TreelikeSnark,
    pub reduced: TreelikeSnark,
    // roles in G
    pub x: VertexId,
    pub y: VertexId,
    pub u: VertexId,
    pub v: VertexId,
    pub x1: VertexId,
    pub x2: VertexId,
    pub y1: VertexId,
    pub y2: VertexId,
    pub a1: VertexId,
    pub a2: VertexId,
    pub c1: VertexId,
    pub c2: VertexId,
    /// Canonical-role vertex map of the pole B in between x and y.
    pub b_verts: [VertexId; 8],
    // roles in G'
    pub z: VertexId,
    pub z1: VertexId,
    pub z2: VertexId,
    /// Correspondence V(G') -> V(G); `None` exactly at z, z1, z2.
    pub map: Vec<Option<VertexId>>,
}

pub struct Reduction {
    pub tree: TreeSpec,
    pub frame: ReductionFrame,
}

/// Performs the induction-step reduction: deletes the near leaves x, y and
/// their common neighbour u, attaches a fresh leaf z to v in their cycle
/// position, and records the role map between G and G' = build(tree').
pub fn reduce(
    snark: &TreelikeSnark,
    x: VertexId,
    y: VertexId,
    u: VertexId,
) -> Result<Reduction> {
    let tree = &snark.tree;
    let cycle = tree.leaf_cycle();
    let leaves = cycle.len();
    if tree.n() - leaves < 2 {
        return Err(Error::TreeTooSmall);
    }
    let pos = (0..leaves)
        .find(|&i| cycle[i] == x && cycle[(i + 1) % leaves] == y)
        .ok_or_else(|| Error::InvalidArgument(format!("{x} and {y} are not cycle-consecutive")))?;
    if tree.leaf_neighbour(x) != u || tree.leaf_neighbour(y) != u {
        return Err(Error::InvalidArgument(format!(
            "{u} is not the common neighbour of {x} and {y}"
        )));
    }
    let v = *tree
        .graph()
        .neighbours(u)
        .iter()
        .find(|&&w| w != x && w != y)
        .expect("internal vertex has a third neighbour");

    // tree': delete x, y, u; append fresh leaf z adjacent to v
    let removed = [x, y, u];
    let kept: Vec<VertexId> = tree
        .graph()
        .vertices()
        .filter(|w| !removed.contains(w))
        .collect();
    let old_to_new = |w: VertexId| -> usize {
        kept.iter().position(|&k| k == w).expect("kept vertex")
    };
    let z_new = kept.len();
    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .filter(|(a, b)| !removed.contains(a) && !removed.contains(b))
        .map(|&(a, b)| (old_to_new(a), old_to_new(b)))
        .collect();
    edges.push((old_to_new(v), z_new));
    let mut new_cycle = Vec::with_capacity(leaves - 1);
    for (j, &w) in cycle.iter().enumerate() {
        if j == pos {
            new_cycle.push(z_new);
        } else if w != y {
            new_cycle.push(old_to_new(w));
        }
    }
    let reduced_tree = TreeSpec::new(kept.len() + 1, &edges, &new_cycle)?;
    let reduced = build(&reduced_tree);

    // roles in G
    let pole = PoleAtlas::get().pole();
    let (x1, x2) = snark.connectors_of(x).expect("leaf x");
    let (y1, y2) = snark.connectors_of(y).expect("leaf y");
    let pole_a = snark.pole_before(x).expect("pole A");
    let pole_b = snark.pole_between(x, y).expect("pole B");
    let pole_c = snark.pole_after(y).expect("pole C");
    let a1 = pole_a.boundary(pole, DanglingRole::R1);
    let a2 = pole_a.boundary(pole, DanglingRole::R2);
    let c1 = pole_c.boundary(pole, DanglingRole::L1);
    let c2 = pole_c.boundary(pole, DanglingRole::L2);

    // roles in G'
    let z = VertexId::from(z_new);
    let (z1, z2) = reduced.connectors_of(z).expect("leaf z");

    // vertex correspondence
    let mut map: Vec<Option<VertexId>> = vec![None; reduced.graph.n()];
    for &w in &kept {
        map[old_to_new(w)] = Some(w);
    }
    for &(leaf, l1, l2) in &reduced.connectors {
        if leaf == z {
            continue;
        }
        let old_leaf = kept[leaf.index()];
        let (o1, o2) = snark.connectors_of(old_leaf).expect("old leaf");
        map[l1.index()] = Some(o1);
        map[l2.index()] = Some(o2);
    }
    for p in &reduced.poles {
        let old_pole = if p.succ == z {
            pole_a
        } else if p.pred == z {
            pole_c
        } else {
            snark
                .pole_between(kept[p.pred.index()], kept[p.succ.index()])
                .expect("matching pole")
        };
        for k in 0..8 {
            map[p.verts[k].index()] = Some(old_pole.verts[k]);
        }
    }
    debug_assert_eq!(map.iter().filter(|m| m.is_none()).count(), 3);

    Ok(Reduction {
        tree: reduced_tree,
        frame: ReductionFrame {
            snark: snark.clone(),
            reduced,
            x,
            y,
            u,
            v,
            x1,
            x2,
            y1,
            y2,
            a1,
            a2,
            c1,
            c2,
            b_verts: pole_b.verts,
            z,
            z1,
            z2,
            map,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::star3;

    fn double_star(cycle: &[usize]) -> TreeSpec {
        TreeSpec::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], cycle).unwrap()
    }

    #[test]
    fn smallest_snark_has_34_vertices_51_edges() {
        let s = build(&star3());
        assert_eq!(s.graph.n(), 34);
        assert_eq!(s.graph.m(), 51);
    }

    #[test]
    fn l4_has_46_vertices_69_edges() {
        let s = build(&double_star(&[2, 3, 4, 5]));
        assert_eq!(s.graph.n(), 46);
        assert_eq!(s.graph.m(), 69);
    }

    #[test]
    fn size_formulas_across_generated_trees() {
        for leaves in 3..=10usize {
            for seed in 0..6u64 {
                let t = crate::gen::gen_tree(leaves, crate::gen::TreeShape::Random, seed).unwrap();
                let s = build(&t);
                assert_eq!(s.graph.n(), 12 * leaves - 2);
                assert_eq!(s.graph.m(), 18 * leaves - 3);
            }
        }
    }

    #[test]
    fn pole_instances_are_role_preserving_copies() {
        let pole = PoleAtlas::get().pole();
        let s = build(&double_star(&[2, 3, 4, 5]));
        for p in s.poles() {
            for &(a, b) in pole.pole.inner_edges() {
                assert!(s.graph.has_edge(p.verts[a.index()], p.verts[b.index()]));
            }
            // each embedded pole vertex keeps its canonical inner degree
            for k in 0..8 {
                let inner = (0..8)
                    .filter(|&j| s.graph.has_edge(p.verts[k], p.verts[j]))
                    .count();
                assert_eq!(inner, pole.inner_neighbours(VertexId::from(k)).len());
            }
        }
    }

    #[test]
    fn connectors_wire_poles_to_leaves() {
        let pole = PoleAtlas::get().pole();
        let s = build(&star3());
        for p in s.poles() {
            let (x1, x2) = s.connectors_of(p.pred).unwrap();
            let (y1, y2) = s.connectors_of(p.succ).unwrap();
            assert!(s.graph.has_edge(p.boundary(pole, DanglingRole::L1), x1));
            assert!(s.graph.has_edge(p.boundary(pole, DanglingRole::L2), x2));
            assert!(s.graph.has_edge(p.boundary(pole, DanglingRole::R1), y1));
            assert!(s.graph.has_edge(p.boundary(pole, DanglingRole::R2), y2));
        }
    }

    #[test]
    fn near_leaves_in_the_star() {
        let t = star3();
        assert_eq!(
            find_near_leaves(&t).unwrap(),
            (VertexId(1), VertexId(2), VertexId(0))
        );
    }

    #[test]
    fn interleaved_cycle_has_no_near_pair() {
        let t = double_star(&[2, 4, 3, 5]);
        assert_eq!(find_near_leaves(&t), Err(Error::NoNearLeaves));
    }

    #[test]
    fn caterpillar_returns_first_sibling_pair() {
        let t = crate::gen::gen_tree(5, crate::gen::TreeShape::Caterpillar, 0).unwrap();
        let (x, y, u) = find_near_leaves(&t).unwrap();
        assert_eq!(t.leaf_neighbour(x), u);
        assert_eq!(t.leaf_neighbour(y), u);
        // cycle-consecutive
        let cycle = t.leaf_cycle();
        let i = cycle.iter().position(|&w| w == x).unwrap();
        assert_eq!(cycle[(i + 1) % cycle.len()], y);
    }

    #[test]
    fn reduce_l4_yields_the_star_shape() {
        let t = double_star(&[2, 3, 4, 5]);
        let s = build(&t);
        let (x, y, u) = find_near_leaves(&t).unwrap();
        let red = reduce(&s, x, y, u).unwrap();
        assert_eq!(red.tree.leaf_count(), 3);
        assert_eq!(red.tree.n(), 4);
        // a 3-leaf tree is a star: one internal vertex of degree 3
        let internals: Vec<_> = red
            .tree
            .graph()
            .vertices()
            .filter(|&w| red.tree.graph().degree(w) == 3)
            .collect();
        assert_eq!(internals.len(), 1);
    }

    #[test]
    fn reduce_removes_exactly_twelve_vertices() {
        for leaves in 4..=8usize {
            let t = crate::gen::gen_tree(leaves, crate::gen::TreeShape::Random, 3).unwrap();
            let s = build(&t);
            let (x, y, u) = find_near_leaves(&t).unwrap();
            let red = reduce(&s, x, y, u).unwrap();
            assert_eq!(red.frame.reduced.graph.n() + 12, s.graph.n());
        }
    }

    #[test]
    fn reduce_rejects_the_base_tree() {
        let t = star3();
        let s = build(&t);
        let (x, y, u) = find_near_leaves(&t).unwrap();
        assert!(matches!(reduce(&s, x, y, u), Err(Error::TreeTooSmall)));
    }

    #[test]
    fn correspondence_is_edge_compatible() {
        let t = crate::gen::gen_tree(6, crate::gen::TreeShape::Random, 11).unwrap();
        let s = build(&t);
        let (x, y, u) = find_near_leaves(&t).unwrap();
        let red = reduce(&s, x, y, u).unwrap();
        let f = &red.frame;
        // injective outside {z, z1, z2}
        let mut images: Vec<VertexId> = f.map.iter().flatten().copied().collect();
        assert_eq!(images.len(), f.reduced.graph.n() - 3);
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), f.reduced.graph.n() - 3);
        // unmapped vertices are exactly z, z1, z2
        for w in f.reduced.graph.vertices() {
            let unmapped = f.map[w.index()].is_none();
            assert_eq!(unmapped, w == f.z || w == f.z1 || w == f.z2);
        }
        // every fully-mapped edge of G' is an edge of G
        for (p, q) in f.reduced.graph.edges() {
            if let (Some(a), Some(b)) = (f.map[p.index()], f.map[q.index()]) {
                assert!(f.snark.graph.has_edge(a, b));
            }
        }
    }

    #[test]
    fn reduction_frame_roles_are_wired_as_documented() {
        let t = double_star(&[2, 3, 4, 5]);
        let s = build(&t);
        let (x, y, u) = find_near_leaves(&t).unwrap();
        let f = reduce(&s, x, y, u).unwrap().frame;
        let g = &f.snark.graph;
        // x1 adjacent to x and a1; x2 to x and a2; y-side mirrors with c
        assert!(g.has_edge(f.x, f.x1) && g.has_edge(f.x1, f.a1));
        assert!(g.has_edge(f.x, f.x2) && g.has_edge(f.x2, f.a2));
        assert!(g.has_edge(f.y, f.y1) && g.has_edge(f.y1, f.c1));
        assert!(g.has_edge(f.y, f.y2) && g.has_edge(f.y2, f.c2));
        assert!(g.has_edge(f.u, f.x) && g.has_edge(f.u, f.y) && g.has_edge(f.u, f.v));
        // z1 is the common neighbour of a1 and c1 in G' (through the map)
        let rg = &f.reduced.graph;
        let a1r = rg
            .vertices()
            .find(|&w| f.map[w.index()] == Some(f.a1))
            .unwrap();
        let c1r = rg
            .vertices()
            .find(|&w| f.map[w.index()] == Some(f.c1))
            .unwrap();
        assert!(rg.has_edge(a1r, f.z1) && rg.has_edge(c1r, f.z1));
        assert!(rg.has_edge(f.z, f.z1) && rg.has_edge(f.z, f.z2));
    }

    #[test]
    fn build_is_compositional_over_reduction() {
        let t = crate::gen::gen_tree(5, crate::gen::TreeShape::Random, 2).unwrap();
        let s = build(&t);
        let (x, y, u) = find_near_leaves(&t).unwrap();
        let red = reduce(&s, x, y, u).unwrap();
        let direct = build(&red.tree);
        assert_eq!(direct.graph, red.frame.reduced.graph);
    }

    #[test]
    fn annotations_format() {
        let s = build(&star3());
        let text = s.annotations();
        assert_eq!(text.lines().filter(|l| l.starts_with("conn ")).count(), 3);
        assert_eq!(text.lines().filter(|l| l.starts_with("pole ")).count(), 3);
        for line in text.lines() {
            let words: Vec<&str> = line.split_whitespace().collect();
            match words[0] {
                "conn" => assert_eq!(words.len(), 4),
                "pole" => assert_eq!(words.len(), 7),
                other => panic!("unexpected directive {other}"),
            }
        }
    }
}
