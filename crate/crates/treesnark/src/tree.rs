//! Tree specifications: a tree whose internal vertices all have degree 3,
//! together with a cyclic order on its leaves.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A validated tree specification. With L leaves there are exactly L-2
/// internal vertices, every internal vertex has degree 3, and the leaf
/// cycle is a cyclic permutation of the leaf set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSpec {
    graph: Graph,
    leaf_cycle: Vec<VertexId>,
}

impl TreeSpec {
    pub fn new(n: usize, edges: &[(usize, usize)], leaf_cycle: &[usize]) -> Result<TreeSpec> {
        let graph = Graph::from_edges(n, edges)?;
        if graph.m() + 1 != n {
            return Err(Error::NotATree);
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut leaves = Vec::new();
        for v in graph.vertices() {
            match graph.degree(v) {
                1 => leaves.push(v),
                2 => return Err(Error::DegreeTwoVertex(v.index())),
                3 => {}
                d => return Err(Error::BadInternalDegree(v.index(), d)),
            }
        }
        if leaves.len() < 3 {
            return Err(Error::TooFewLeaves(leaves.len()));
        }
        let cycle: Vec<VertexId> = leaf_cycle.iter().map(|&v| VertexId::from(v)).collect();
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != leaves {
            return Err(Error::LeafCycleMismatch);
        }
        if cycle.len() != leaves.len() {
            return Err(Error::LeafCycleMismatch);
        }
        Ok(TreeSpec {
            graph,
            leaf_cycle: cycle,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_cycle.len()
    }

    pub fn leaf_cycle(&self) -> &[VertexId] {
        &self.leaf_cycle
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.graph.degree(v) == 1
    }

    /// The unique tree neighbour of a leaf.
    pub fn leaf_neighbour(&self, leaf: VertexId) -> VertexId {
        self.graph.neighbours(leaf)[0]
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.graph.edges()
    }

    /// Serialises to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("tree {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("edge {u} {v}\n"));
        }
        out.push_str("cycle");
        for v in &self.leaf_cycle {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
        out
    }

    pub fn from_text(text: &str) -> Result<TreeSpec> {
        let err = |line: usize, msg: &str| Error::Parse {
            format: "tree",
            line,
            msg: msg.to_string(),
        };
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut cycle: Option<Vec<usize>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut words = t.split_whitespace();
            match words.next() {
                Some("tree") => {
                    let v = words
                        .next()
                        .ok_or_else(|| err(line, "missing vertex count"))?;
                    n = Some(
                        v.parse()
                            .map_err(|_| err(line, "vertex count is not a number"))?,
                    );
                }
                Some("edge") => {
                    let mut parse = || -> Result<usize> {
                        words
                            .next()
                            .ok_or_else(|| err(line, "edge needs two endpoints"))?
                            .parse()
                            .map_err(|_| err(line, "edge endpoint is not a number"))
                    };
                    let u = parse()?;
                    let v = parse()?;
                    edges.push((u, v));
                }
                Some("cycle") => {
                    let mut c = Vec::new();
                    for w in words {
                        c.push(
                            w.parse()
                                .map_err(|_| err(line, "cycle entry is not a number"))?,
                        );
                    }
                    cycle = Some(c);
                }
                Some(other) => return Err(err(line, &format!("unknown directive `{other}`"))),
                None => {}
            }
        }
        let n = n.ok_or_else(|| err(0, "missing `tree <n>` header"))?;
        let cycle = cycle.ok_or_else(|| err(0, "missing `cycle` line"))?;
        TreeSpec::new(n, &edges, &cycle)
    }
}

/// The canonical 3-leaf star: centre 0, leaves 1, 2, 3.
pub fn star3() -> TreeSpec {
    TreeSpec::new(4, &[(0, 1), (0, 2), (0, 3)], &[1, 2, 3]).expect("star is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_is_valid() {
        let t = star3();
        assert_eq!(t.leaf_count(), 3);
        assert_eq!(t.n(), 4);
    }

    #[test]
    fn path_has_degree_two_vertices() {
        let r = TreeSpec::new(4, &[(0, 1), (1, 2), (2, 3)], &[0, 3]);
        assert!(matches!(r, Err(Error::DegreeTwoVertex(_))));
    }

    #[test]
    fn double_star_is_valid() {
        // two adjacent internal vertices, two leaves each
        let t = TreeSpec::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], &[2, 4, 3, 5])
            .unwrap();
        assert_eq!(t.leaf_count(), 4);
        // L leaves force exactly L-2 internal vertices
        assert_eq!(t.n() - t.leaf_count(), t.leaf_count() - 2);
    }

    #[test]
    fn cycle_must_match_leaf_set() {
        let r = TreeSpec::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], &[2, 3, 4, 4]);
        assert_eq!(r, Err(Error::LeafCycleMismatch));
        let r = TreeSpec::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], &[2, 3, 4]);
        assert_eq!(r, Err(Error::LeafCycleMismatch));
    }

    #[test]
    fn cyclic_edge_sets_are_rejected() {
        let r = TreeSpec::new(3, &[(0, 1), (1, 2), (2, 0)], &[]);
        assert_eq!(r, Err(Error::NotATree));
    }

    #[test]
    fn disconnected_forest_rejected() {
        let r = TreeSpec::new(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)], &[1, 2, 3]);
        assert!(r.is_err());
    }

    #[test]
    fn text_round_trip() {
        let t = TreeSpec::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], &[2, 4, 3, 5])
            .unwrap();
        let text = t.to_text();
        assert_eq!(TreeSpec::from_text(&text).unwrap(), t);
    }

    #[test]
    fn malformed_text() {
        assert!(TreeSpec::from_text("tree x\ncycle 1 2 3\n").is_err());
        assert!(TreeSpec::from_text("edge 0 1\n").is_err());
        assert!(TreeSpec::from_text("tree 4\nedge 0 1\nbogus\ncycle 1\n").is_err());
    }
}
