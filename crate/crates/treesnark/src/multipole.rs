//! Multipoles: vertex sets with ordinary inner edges plus labelled dangling
//! edges. Joining dangling edges is the composition primitive for building
//! snarks out of poles.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dangling {
    pub label: String,
    pub end: VertexId,
}

/// A k-pole: vertices `0..n`, simple inner edges, and an ordered list of
/// labelled dangling edges. Every vertex has degree at most 3 counting
/// dangling incidences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipole {
    n: usize,
    inner: Vec<(VertexId, VertexId)>,
    dangling: Vec<Dangling>,
}

impl Multipole {
    pub fn new(n: usize) -> Multipole {
        Multipole {
            n,
            inner: Vec::new(),
            dangling: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inner_edges(&self) -> &[(VertexId, VertexId)] {
        &self.inner
    }

    pub fn dangling(&self) -> &[Dangling] {
        &self.dangling
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.n += 1;
        VertexId::from(self.n - 1)
    }

    /// Degree counting both inner edges and dangling incidences.
    pub fn degree(&self, v: VertexId) -> usize {
        self.inner
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
            + self.dangling.iter().filter(|d| d.end == v).count()
    }

    pub fn has_inner_edge(&self, u: VertexId, v: VertexId) -> bool {
        let e = norm(u, v);
        self.inner.contains(&e)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() >= self.n {
            return Err(Error::VertexOutOfRange(v.index(), self.n));
        }
        Ok(())
    }

    fn check_capacity(&self, v: VertexId) -> Result<()> {
        if self.degree(v) >= 3 {
            return Err(Error::DegreeOverflow(v.index()));
        }
        Ok(())
    }

    pub fn add_inner_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u.index()));
        }
        if self.has_inner_edge(u, v) {
            return Err(Error::ParallelEdge(u.index(), v.index()));
        }
        self.check_capacity(u)?;
        self.check_capacity(v)?;
        self.inner.push(norm(u, v));
        Ok(())
    }

    pub fn add_dangling(&mut self, label: &str, end: VertexId) -> Result<()> {
        self.check_vertex(end)?;
        if self.dangling.iter().any(|d| d.label == label) {
            return Err(Error::DuplicateDangling(label.to_string()));
        }
        self.check_capacity(end)?;
        self.dangling.push(Dangling {
            label: label.to_string(),
            end,
        });
        Ok(())
    }

    pub fn dangling_end(&self, label: &str) -> Result<VertexId> {
        self.dangling
            .iter()
            .find(|d| d.label == label)
            .map(|d| d.end)
            .ok_or_else(|| Error::UnknownDangling(label.to_string()))
    }

    /// Joins two dangling edges: both are deleted and their endvertices made
    /// adjacent. The vertex set is unchanged.
    pub fn join_dangling(&self, d1: &str, d2: &str) -> Result<Multipole> {
        if d1 == d2 {
            return Err(Error::UnknownDangling(d2.to_string()));
        }
        let e1 = self.dangling_end(d1)?;
        let e2 = self.dangling_end(d2)?;
        if e1 == e2 {
            return Err(Error::SharedEndvertex(
                d1.to_string(),
                d2.to_string(),
                e1.index(),
            ));
        }
        if self.has_inner_edge(e1, e2) {
            return Err(Error::ParallelEdge(e1.index(), e2.index()));
        }
        let mut out = self.clone();
        out.dangling.retain(|d| d.label != d1 && d.label != d2);
        out.inner.push(norm(e1, e2));
        Ok(out)
    }

    /// Joins a dangling edge to a vertex `y`: the dangling edge is deleted
    /// and its endvertex made adjacent to `y`.
    pub fn join_to_vertex(&self, d: &str, y: VertexId) -> Result<Multipole> {
        self.check_vertex(y)?;
        let e = self.dangling_end(d)?;
        if e == y {
            return Err(Error::Loop(y.index()));
        }
        if self.has_inner_edge(e, y) {
            return Err(Error::ParallelEdge(e.index(), y.index()));
        }
        self.check_capacity(y)?;
        let mut out = self.clone();
        out.dangling.retain(|dd| dd.label != d);
        out.inner.push(norm(e, y));
        Ok(out)
    }

    /// Splits an inner edge back into two dangling edges, the inverse of
    /// `join_dangling` up to labels.
    pub fn split_edge(&self, u: VertexId, v: VertexId, lab_u: &str, lab_v: &str) -> Result<Multipole> {
        if !self.has_inner_edge(u, v) {
            return Err(Error::NoSuchEdge(u.index(), v.index()));
        }
        for lab in [lab_u, lab_v] {
            if self.dangling.iter().any(|d| d.label == lab) {
                return Err(Error::DuplicateDangling(lab.to_string()));
            }
        }
        if lab_u == lab_v {
            return Err(Error::DuplicateDangling(lab_u.to_string()));
        }
        let mut out = self.clone();
        let e = norm(u, v);
        out.inner.retain(|&x| x != e);
        out.dangling.push(Dangling {
            label: lab_u.to_string(),
            end: u,
        });
        out.dangling.push(Dangling {
            label: lab_v.to_string(),
            end: v,
        });
        Ok(out)
    }

    /// Converts a 0-pole into an ordinary graph.
    pub fn into_graph(self) -> Result<Graph> {
        if let Some(d) = self.dangling.first() {
            return Err(Error::UnknownDangling(format!(
                "cannot convert: dangling edge `{}` remains",
                d.label
            )));
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.inner {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

fn norm(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pole::petersen_4pole;

    #[test]
    fn join_two_danglings_of_the_pole() {
        let p = petersen_4pole();
        let m = p.pole.join_dangling("l1", "r1").unwrap();
        assert_eq!(m.dangling().len(), 2);
        assert_eq!(m.inner_edges().len(), 11);
        assert_eq!(m.n(), 8);
        let labels: Vec<&str> = m.dangling().iter().map(|d| d.label.as_str()).collect();
        assert_eq!(labels, ["l2", "r2"]);
    }

    #[test]
    fn joining_into_a_parallel_edge_is_rejected() {
        // path a--b with one dangling edge at each end
        let mut m = Multipole::new(2);
        m.add_inner_edge(VertexId(0), VertexId(1)).unwrap();
        m.add_dangling("p", VertexId(0)).unwrap();
        m.add_dangling("q", VertexId(1)).unwrap();
        assert_eq!(
            m.join_dangling("p", "q"),
            Err(Error::ParallelEdge(0, 1))
        );
    }

    #[test]
    fn closing_the_pole_gives_a_cubic_0_pole() {
        let p = petersen_4pole();
        let m = p
            .pole
            .join_dangling("l1", "l2")
            .unwrap()
            .join_dangling("r1", "r2")
            .unwrap();
        assert_eq!(m.dangling().len(), 0);
        assert_eq!(m.n(), 8);
        for v in 0..8 {
            assert_eq!(m.degree(VertexId::from(v)), 3);
        }
        let g = m.into_graph().unwrap();
        assert_eq!(g.m(), 12);
    }

    #[test]
    fn join_to_fresh_vertex() {
        let p = petersen_4pole();
        let mut m = p.pole.clone();
        let y = m.add_vertex();
        let m = m.join_to_vertex("l1", y).unwrap();
        assert_eq!(m.n(), 9);
        assert_eq!(m.dangling().len(), 3);
        assert_eq!(m.degree(y), 1);
    }

    #[test]
    fn join_to_full_vertex_rejected() {
        let p = petersen_4pole();
        // vertex 5 is an interior pole vertex of degree 3, not adjacent to
        // the endvertex of l1
        assert_eq!(
            p.pole.join_to_vertex("l1", VertexId(5)),
            Err(Error::DegreeOverflow(5))
        );
    }

    #[test]
    fn four_joins_complete_the_connector_pair() {
        // replay of the snark construction around one pole: two fresh
        // connector vertices absorb one left and one right dangling each...
        let p = petersen_4pole();
        let mut m = p.pole.clone();
        let w1 = m.add_vertex();
        let w2 = m.add_vertex();
        let m = m
            .join_to_vertex("l1", w1)
            .unwrap()
            .join_to_vertex("l2", w2)
            .unwrap()
            .join_to_vertex("r1", w1)
            .unwrap()
            .join_to_vertex("r2", w2)
            .unwrap();
        assert_eq!(m.dangling().len(), 0);
        assert_eq!(m.degree(w1), 2);
        assert_eq!(m.degree(w2), 2);
    }

    #[test]
    fn split_is_the_inverse_of_join() {
        let p = petersen_4pole();
        let joined = p.pole.join_dangling("l1", "r1").unwrap();
        let e1 = p.pole.dangling_end("l1").unwrap();
        let e2 = p.pole.dangling_end("r1").unwrap();
        let back = joined.split_edge(e1, e2, "l1", "r1").unwrap();
        assert_eq!(back.n(), p.pole.n());
        let mut a: Vec<_> = back.inner_edges().to_vec();
        let mut b: Vec<_> = p.pole.inner_edges().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        let mut da: Vec<_> = back.dangling().iter().map(|d| (d.label.clone(), d.end)).collect();
        let mut db: Vec<_> = p.pole.dangling().iter().map(|d| (d.label.clone(), d.end)).collect();
        da.sort();
        db.sort();
        assert_eq!(da, db);
    }

    #[test]
    fn handshake_over_constructed_poles() {
        let p = petersen_4pole();
        let poles = [
            p.pole.clone(),
            p.pole.join_dangling("l1", "r1").unwrap(),
            p.pole.join_dangling("l1", "l2").unwrap(),
        ];
        for m in &poles {
            let degsum: usize = (0..m.n()).map(|v| m.degree(VertexId::from(v))).sum();
            assert_eq!(degsum, 2 * m.inner_edges().len() + m.dangling().len());
        }
    }
}
