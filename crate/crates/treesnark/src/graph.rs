//! Simple undirected graphs with dense vertex ids, the cubic-graph wrapper,
//! and bridge detection.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index. Ids within one graph are always `0..n` with no gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

/// One of the two colours of a bisection. Colour 1 is black, colour 2 white.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    pub fn swapped(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }

    pub fn digit(self) -> char {
        match self {
            Colour::Black => '1',
            Colour::White => '2',
        }
    }

    pub fn from_digit(c: char) -> Option<Colour> {
        match c {
            '1' => Some(Colour::Black),
            '2' => Some(Colour::White),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digit())
    }
}

/// A finite simple undirected graph. Simplicity (no loops, no parallel
/// edges) is enforced at mutation time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(VertexId::from(u), VertexId::from(v))?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() >= self.n() {
            return Err(Error::VertexOutOfRange(v.index(), self.n()));
        }
        Ok(())
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        VertexId::from(self.n() - 1)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u.index()));
        }
        if self.has_edge(u, v) {
            return Err(Error::ParallelEdge(u.index(), v.index()));
        }
        self.adj[u.index()].push(v);
        self.adj[v.index()].push(u);
        self.adj[u.index()].sort_unstable();
        self.adj[v.index()].sort_unstable();
        Ok(())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj
            .get(u.index())
            .is_some_and(|ns| ns.binary_search(&v).is_ok())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n()).map(VertexId::from)
    }

    /// All edges as normalised pairs `(u, v)` with `u < v`, in lexicographic
    /// order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.vertices() {
            for &v in self.neighbours(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([VertexId(0)]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbours(u) {
                if !seen[v.index()] {
                    seen[v.index()] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n()
    }

    /// Vertices in breadth-first order from vertex 0, neighbours visited in
    /// ascending id order. Only meaningful on connected graphs.
    pub fn bfs_order(&self) -> Vec<VertexId> {
        let mut order = Vec::with_capacity(self.n());
        let mut seen = vec![false; self.n()];
        for start in self.vertices() {
            if seen[start.index()] {
                continue;
            }
            seen[start.index()] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &v in self.neighbours(u) {
                    if !seen[v.index()] {
                        seen[v.index()] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        order
    }

    /// All bridges (cut edges), found by an iterative depth-first lowpoint
    /// search. Works on disconnected graphs too (per component).
    pub fn bridges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.n();
        let mut disc = vec![0u32; n];
        let mut low = vec![0u32; n];
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        let mut time = 1u32;

        for root in 0..n {
            if visited[root] {
                continue;
            }
            // stack frames: (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            visited[root] = true;
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
                if *i < self.adj[u].len() {
                    let v = self.adj[u][*i].index();
                    *i += 1;
                    if !visited[v] {
                        visited[v] = true;
                        disc[v] = time;
                        low[v] = time;
                        time += 1;
                        stack.push((v, u, 0));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            let (a, b) = if p < u { (p, u) } else { (u, p) };
                            out.push((VertexId::from(a), VertexId::from(b)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// True iff `g` is connected and has no bridge. Disconnected input is a
/// distinct diagnostic rather than a bridgelessness verdict.
pub fn is_bridgeless(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.bridges().is_empty())
}

/// A simple graph in which every vertex has degree exactly 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicGraph(Graph);

impl CubicGraph {
    pub fn new(g: Graph) -> Result<CubicGraph> {
        for v in g.vertices() {
            if g.degree(v) != 3 {
                return Err(Error::NotCubic(v.index(), g.degree(v)));
            }
        }
        Ok(CubicGraph(g))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<CubicGraph> {
        CubicGraph::new(Graph::from_edges(n, edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }
}

impl std::ops::Deref for CubicGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn simplicity_enforced() {
        let mut g = Graph::new(3);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(0)),
            Err(Error::Loop(0))
        );
        assert_eq!(
            g.add_edge(VertexId(1), VertexId(0)),
            Err(Error::ParallelEdge(1, 0))
        );
    }

    #[test]
    fn k4_is_bridgeless() {
        let g = zoo::k4();
        assert_eq!(is_bridgeless(g.graph()), Ok(true));
    }

    #[test]
    fn single_edge_is_a_bridge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(is_bridgeless(&g), Ok(false));
        assert_eq!(g.bridges(), vec![(VertexId(0), VertexId(1))]);
    }

    #[test]
    fn two_triangles_joined_by_an_edge() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(is_bridgeless(&g), Ok(false));
        assert_eq!(g.bridges(), vec![(VertexId(2), VertexId(3))]);
    }

    #[test]
    fn disconnected_is_a_diagnostic() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_bridgeless(&g), Err(Error::Disconnected));
    }

    #[test]
    fn cubic_rejects_non_cubic() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(CubicGraph::new(g), Err(Error::NotCubic(_, 1))));
    }

    /// Deleting any single edge of a bridgeless graph keeps it connected;
    /// deleting a bridge disconnects. This is the O(n*m) oracle the lowpoint
    /// search is checked against.
    fn bridges_by_deletion(g: &Graph) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (u, v) in g.edges() {
            let mut h = Graph::new(g.n());
            for (a, b) in g.edges() {
                if (a, b) != (u, v) {
                    h.add_edge(a, b).unwrap();
                }
            }
            // connectivity restricted to the original component of u
            let mut seen = vec![false; h.n()];
            let mut stack = vec![u];
            seen[u.index()] = true;
            while let Some(x) = stack.pop() {
                for &y in h.neighbours(x) {
                    if !seen[y.index()] {
                        seen[y.index()] = true;
                        stack.push(y);
                    }
                }
            }
            if !seen[v.index()] {
                out.push((u, v));
            }
        }
        out
    }

    #[test]
    fn lowpoint_matches_deletion_oracle() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut cases: Vec<Graph> = vec![
            zoo::k4().graph().clone(),
            zoo::pentagonal_prism().graph().clone(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
                .unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
        ];
        for n in [8usize, 12, 16, 20] {
            for _ in 0..40 {
                cases.push(crate::gen::random_cubic(n, &mut rng).graph().clone());
            }
        }
        // also sub-cubic graphs: drop a couple of edges from cubic ones
        for n in [10usize, 14, 18] {
            for _ in 0..20 {
                let g = crate::gen::random_cubic(n, &mut rng);
                let edges = g.edges();
                let keep: Vec<(usize, usize)> = edges
                    .iter()
                    .skip(2)
                    .map(|&(u, v)| (u.index(), v.index()))
                    .collect();
                cases.push(Graph::from_edges(n, &keep).unwrap());
            }
        }
        for g in &cases {
            assert_eq!(g.bridges(), bridges_by_deletion(g));
        }
    }
}
