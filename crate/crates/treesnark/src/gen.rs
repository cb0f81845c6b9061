//! Seeded instance generators: tree specifications with planar-consistent
//! leaf cycles, and random labelled cubic graphs for property tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Graph, VertexId};
use crate::tree::{star3, TreeSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeShape {
    Star,
    Caterpillar,
    Random,
}

impl std::str::FromStr for TreeShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<TreeShape> {
        match s {
            "star" => Ok(TreeShape::Star),
            "caterpillar" => Ok(TreeShape::Caterpillar),
            "random" => Ok(TreeShape::Random),
            other => Err(Error::InvalidArgument(format!("unknown shape `{other}`"))),
        }
    }
}

/// Generates a tree specification with the requested number of leaves. The
/// emitted leaf cycle is always consistent with a planar embedding of the
/// tree, so consecutive near leaves exist. Deterministic per seed.
pub fn gen_tree(leaves: usize, shape: TreeShape, seed: u64) -> Result<TreeSpec> {
    if leaves < 3 {
        return Err(Error::TooFewLeaves(leaves));
    }
    match shape {
        TreeShape::Star => {
            if leaves != 3 {
                return Err(Error::InvalidArgument(
                    "star shape requires exactly 3 leaves (internal degree is fixed at 3)"
                        .to_string(),
                ));
            }
            Ok(star3())
        }
        TreeShape::Caterpillar => Ok(caterpillar(leaves)),
        TreeShape::Random => Ok(random_tree(leaves, seed)),
    }
}

/// Spine of L-2 internal vertices; the two spine ends carry two leaves
/// each, the middle ones one leaf each. The cycle walks one side of the
/// spine and returns along the other.
fn caterpillar(leaves: usize) -> TreeSpec {
    if leaves == 3 {
        return star3();
    }
    let k = leaves - 2; // spine vertices 0..k
    let mut edges = Vec::new();
    for i in 0..k - 1 {
        edges.push((i, i + 1));
    }
    let mut next = k;
    let mut leaf_of_spine: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, extra) in [(0, 2), (k - 1, 2)] {
        for _ in 0..extra {
            edges.push((i, next));
            leaf_of_spine[i].push(next);
            next += 1;
        }
    }
    for (i, spine_leaves) in leaf_of_spine.iter_mut().enumerate().take(k - 1).skip(1) {
        edges.push((i, next));
        spine_leaves.push(next);
        next += 1;
    }
    // planar walk: first leaf of the left end, the middle leaves, both
    // leaves of the right end, then back to the left end's second leaf
    let mut cycle = vec![leaf_of_spine[0][0]];
    for spine_leaves in leaf_of_spine.iter().take(k - 1).skip(1) {
        cycle.push(spine_leaves[0]);
    }
    cycle.push(leaf_of_spine[k - 1][0]);
    cycle.push(leaf_of_spine[k - 1][1]);
    cycle.push(leaf_of_spine[0][1]);
    TreeSpec::new(next, &edges, &cycle).expect("caterpillar is valid")
}

/// Grows a random tree from the 3-leaf star: each step picks a leaf and
/// turns it internal by attaching two fresh leaves, which take its place
/// (adjacently) in the cycle. This reaches every shape and keeps the cycle
/// planar-consistent.
fn random_tree(leaves: usize, seed: u64) -> TreeSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 4usize;
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3)];
    let mut cycle: Vec<usize> = vec![1, 2, 3];
    for _ in 3..leaves {
        let pos = rng.random_range(0..cycle.len());
        let x = cycle[pos];
        let (w1, w2) = (n, n + 1);
        n += 2;
        edges.push((x, w1));
        edges.push((x, w2));
        cycle.splice(pos..=pos, [w1, w2]);
    }
    TreeSpec::new(n, &edges, &cycle).expect("grown tree is valid")
}

/// A random labelled cubic graph on `n` vertices (n even, n >= 4), drawn
/// from the pairing model with rejection of loops and parallel edges. Not
/// necessarily connected.
pub fn random_cubic(n: usize, rng: &mut impl Rng) -> CubicGraph {
    assert!(n >= 4 && n.is_multiple_of(2), "cubic graphs need even n >= 4");
    loop {
        if let Some(g) = try_pairing(n, rng) {
            return g;
        }
    }
}

/// As `random_cubic` but connected.
pub fn random_connected_cubic(n: usize, rng: &mut impl Rng) -> CubicGraph {
    loop {
        let g = random_cubic(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

fn try_pairing(n: usize, rng: &mut impl Rng) -> Option<CubicGraph> {
    let mut points: Vec<usize> = (0..3 * n).collect();
    // Fisher-Yates
    for i in (1..points.len()).rev() {
        let j = rng.random_range(0..=i);
        points.swap(i, j);
    }
    let mut g = Graph::new(n);
    for pair in points.chunks(2) {
        let (u, v) = (VertexId::from(pair[0] / 3), VertexId::from(pair[1] / 3));
        if g.add_edge(u, v).is_err() {
            return None;
        }
    }
    CubicGraph::new(g).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::find_near_leaves;

    #[test]
    fn star_requires_three_leaves() {
        assert!(gen_tree(3, TreeShape::Star, 0).is_ok());
        assert!(gen_tree(4, TreeShape::Star, 0).is_err());
        assert!(gen_tree(2, TreeShape::Random, 0).is_err());
    }

    #[test]
    fn caterpillars_are_valid_and_have_near_leaves() {
        for leaves in 3..=9 {
            let t = gen_tree(leaves, TreeShape::Caterpillar, 0).unwrap();
            assert_eq!(t.leaf_count(), leaves);
            assert!(find_near_leaves(&t).is_ok());
        }
    }

    #[test]
    fn random_trees_are_valid_and_have_near_leaves() {
        for leaves in 3..=9 {
            for seed in 0..20 {
                let t = gen_tree(leaves, TreeShape::Random, seed).unwrap();
                assert_eq!(t.leaf_count(), leaves);
                assert!(find_near_leaves(&t).is_ok());
            }
        }
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let a = gen_tree(7, TreeShape::Random, 123).unwrap();
        let b = gen_tree(7, TreeShape::Random, 123).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn different_seeds_reach_different_shapes() {
        let texts: std::collections::HashSet<String> = (0..20)
            .map(|seed| gen_tree(6, TreeShape::Random, seed).unwrap().to_text())
            .collect();
        assert!(texts.len() > 1);
    }

    #[test]
    fn random_cubic_is_cubic() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [4usize, 8, 14] {
            let g = random_cubic(n, &mut rng);
            assert_eq!(g.n(), n);
            assert_eq!(g.m(), 3 * n / 2);
        }
    }
}
