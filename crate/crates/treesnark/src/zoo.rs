//! Small named cubic graphs used by tests and the oracle suite.

use crate::error::Result;
use crate::graph::CubicGraph;

/// Complete graph on 4 vertices.
pub fn k4() -> CubicGraph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Complete bipartite graph K_{3,3}, parts {0,1,2} and {3,4,5}.
pub fn k33() -> CubicGraph {
    build(
        6,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ],
    )
}

/// The 3-cube Q3: vertices are 3-bit strings, edges flip one bit.
pub fn cube() -> CubicGraph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    build(8, &edges)
}

/// Pentagonal prism: two 5-cycles 0..4 and 5..9 joined by spokes i--i+5.
pub fn pentagonal_prism() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..5usize {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 1) % 5));
        edges.push((i, i + 5));
    }
    build(10, &edges)
}

fn build(n: usize, edges: &[(usize, usize)]) -> CubicGraph {
    try_build(n, edges).expect("named graph is valid")
}

fn try_build(n: usize, edges: &[(usize, usize)]) -> Result<CubicGraph> {
    CubicGraph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((k4().n(), k4().m()), (4, 6));
        assert_eq!((k33().n(), k33().m()), (6, 9));
        assert_eq!((cube().n(), cube().m()), (8, 12));
        let p = pentagonal_prism();
        assert_eq!((p.n(), p.m()), (10, 15));
    }
}
