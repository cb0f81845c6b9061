//! Independent brute-force oracles: exhaustive 2-bisection search,
//! 3-edge-colourability, perfect matching enumeration and k-cover
//! decisions. Negative answers require full exhaustion; exceeded budgets
//! yield an explicit `Indeterminate`, never a silent false.

use std::time::{Duration, Instant};

use crate::bisection::{verify, Bisection};
use crate::error::{Error, Result};
use crate::graph::{Colour, CubicGraph, VertexId};

/// Node and wall-clock limits for the exhaustive searches.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Result<SearchBudget> {
        if max_nodes == 0 || max_time.is_zero() {
            return Err(Error::BadBudget);
        }
        Ok(SearchBudget {
            max_nodes,
            max_time,
        })
    }
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            max_nodes: 2_000_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

struct Meter {
    nodes: u64,
    start: Instant,
    budget: SearchBudget,
    exhausted: bool,
}

impl Meter {
    fn new(budget: SearchBudget) -> Meter {
        Meter {
            nodes: 0,
            start: Instant::now(),
            budget,
            exhausted: false,
        }
    }

    /// Counts one search node; returns false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(4096) && self.start.elapsed() > self.budget.max_time)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BisectionSearch {
    Found(Bisection),
    NotExists,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

/// Backtracking search for a 2-bisection. Vertices are coloured in
/// breadth-first order from vertex 0 so the two local prunes bite early:
/// the class-size cap, and rejection of any monochromatic 3-vertex path
/// among coloured vertices. `NotExists` only after exhausting the space.
pub fn brute_force_2bisection(g: &CubicGraph, budget: SearchBudget) -> BisectionSearch {
    let mut found = Vec::new();
    match search_2bisections(g, budget, 1, &mut found) {
        SearchStatus::Complete | SearchStatus::LimitHit => {
            if let Some(b) = found.into_iter().next() {
                BisectionSearch::Found(b)
            } else {
                BisectionSearch::NotExists
            }
        }
        SearchStatus::BudgetSpent => {
            if let Some(b) = found.into_iter().next() {
                BisectionSearch::Found(b)
            } else {
                BisectionSearch::Indeterminate
            }
        }
    }
}

/// The first `limit` 2-bisections in the deterministic search order.
pub fn enumerate_2bisections(g: &CubicGraph, limit: usize) -> Vec<Bisection> {
    let mut found = Vec::new();
    search_2bisections(g, SearchBudget::default(), limit, &mut found);
    found
}

enum SearchStatus {
    Complete,
    LimitHit,
    BudgetSpent,
}

fn search_2bisections(
    g: &CubicGraph,
    budget: SearchBudget,
    limit: usize,
    found: &mut Vec<Bisection>,
) -> SearchStatus {
    struct Search<'a> {
        g: &'a CubicGraph,
        order: Vec<VertexId>,
        colours: Vec<Option<Colour>>,
        limit: usize,
        found: &'a mut Vec<Bisection>,
        meter: Meter,
    }

    impl Search<'_> {
        fn admissible(&self, v: VertexId, c: Colour) -> bool {
            let mut same = 0;
            for &w in self.g.neighbours(v) {
                if self.colours[w.index()] == Some(c) {
                    same += 1;
                    if same >= 2 {
                        return false;
                    }
                    // w already has its own same-coloured neighbour: v
                    // extends a monochromatic edge into a path of three
                    if self
                        .g
                        .neighbours(w)
                        .iter()
                        .any(|&x| x != v && self.colours[x.index()] == Some(c))
                    {
                        return false;
                    }
                }
            }
            true
        }

        fn rec(&mut self, counts: (usize, usize), k: usize) -> Option<SearchStatus> {
            let n = self.g.n();
            if counts.0 > n / 2 || counts.1 > n / 2 {
                return None;
            }
            if k == n {
                self.found.push(Bisection::new(
                    self.colours.iter().map(|c| c.unwrap()).collect(),
                ));
                if self.found.len() >= self.limit {
                    return Some(SearchStatus::LimitHit);
                }
                return None;
            }
            let v = self.order[k];
            for c in [Colour::Black, Colour::White] {
                if !self.meter.tick() {
                    return Some(SearchStatus::BudgetSpent);
                }
                if self.admissible(v, c) {
                    self.colours[v.index()] = Some(c);
                    let counts = match c {
                        Colour::Black => (counts.0 + 1, counts.1),
                        Colour::White => (counts.0, counts.1 + 1),
                    };
                    if let Some(stop) = self.rec(counts, k + 1) {
                        return Some(stop);
                    }
                    self.colours[v.index()] = None;
                }
            }
            None
        }
    }

    let mut search = Search {
        g,
        order: g.bfs_order(),
        colours: vec![None; g.n()],
        limit,
        found,
        meter: Meter::new(budget),
    };
    let status = search.rec((0, 0), 0);
    debug_assert!(found
        .iter()
        .all(|b| verify(g, b).map(|r| r.ok()).unwrap_or(false)));
    status.unwrap_or(SearchStatus::Complete)
}

/// Full-enumeration filter over all 2^n colourings, checked by component
/// labelling. Independent of the backtracking search; intended for n <= 20.
pub fn naive_2bisection(g: &CubicGraph) -> Option<Bisection> {
    let n = g.n();
    assert!(n <= 24, "naive filter is exponential in n");
    for mask in 0u64..(1 << n) {
        let colours: Vec<Colour> = (0..n)
            .map(|v| {
                if (mask >> v) & 1 == 0 {
                    Colour::Black
                } else {
                    Colour::White
                }
            })
            .collect();
        let b = Bisection::new(colours);
        if verify(g, &b).expect("total colouring").ok() {
            return Some(b);
        }
    }
    None
}

/// Backtracking proper 3-edge-colouring. The three edges at the start
/// vertex are pinned to the three colours (colour names are symmetric),
/// and the next edge chosen is always one with the most constrained
/// endpoints.
pub fn is_3_edge_colourable(g: &CubicGraph, budget: SearchBudget) -> Verdict {
    let edges = g.edges();
    let m = edges.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u.index()].push(i);
        incident[v.index()].push(i);
    }
    let mut colour: Vec<u8> = vec![0; m];
    // used colour bitmask per vertex
    let mut used: Vec<u8> = vec![0; g.n()];
    let mut meter = Meter::new(budget);

    // pin the three edges at vertex 0
    let first = incident[0].clone();
    for (k, &e) in first.iter().enumerate() {
        let c = (k + 1) as u8;
        colour[e] = c;
        let (u, v) = edges[e];
        used[u.index()] |= 1 << c;
        used[v.index()] |= 1 << c;
    }

    fn pick_edge(colour: &[u8], edges: &[(VertexId, VertexId)], used: &[u8]) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if colour[i] != 0 {
                continue;
            }
            let score = used[u.index()].count_ones() + used[v.index()].count_ones();
            if best.is_none() || score > best.unwrap().0 {
                best = Some((score, i));
            }
        }
        best.map(|(_, i)| i)
    }

    fn rec(
        edges: &[(VertexId, VertexId)],
        colour: &mut Vec<u8>,
        used: &mut Vec<u8>,
        meter: &mut Meter,
    ) -> Option<bool> {
        let Some(e) = pick_edge(colour, edges, used) else {
            return Some(true);
        };
        let (u, v) = edges[e];
        for c in 1u8..=3 {
            if !meter.tick() {
                return None;
            }
            let bit = 1 << c;
            if used[u.index()] & bit != 0 || used[v.index()] & bit != 0 {
                continue;
            }
            colour[e] = c;
            used[u.index()] |= bit;
            used[v.index()] |= bit;
            match rec(edges, colour, used, meter) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            colour[e] = 0;
            used[u.index()] &= !bit;
            used[v.index()] &= !bit;
        }
        Some(false)
    }

    match rec(&edges, &mut colour, &mut used, &mut meter) {
        Some(true) => Verdict::True,
        Some(false) => Verdict::False,
        None => Verdict::Indeterminate,
    }
}

/// All perfect matchings, each a sorted edge list, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingSet {
    pub matchings: Vec<Vec<(VertexId, VertexId)>>,
}

pub fn enumerate_perfect_matchings(g: &CubicGraph) -> MatchingSet {
    assert!(g.n().is_multiple_of(2));
    let mut covered = vec![false; g.n()];
    let mut current: Vec<(VertexId, VertexId)> = Vec::new();
    let mut out: Vec<Vec<(VertexId, VertexId)>> = Vec::new();

    fn rec(
        g: &CubicGraph,
        covered: &mut Vec<bool>,
        current: &mut Vec<(VertexId, VertexId)>,
        out: &mut Vec<Vec<(VertexId, VertexId)>>,
    ) {
        let Some(u) = (0..g.n()).find(|&v| !covered[v]).map(VertexId::from) else {
            let mut m = current.clone();
            m.sort_unstable();
            out.push(m);
            return;
        };
        covered[u.index()] = true;
        for &w in g.neighbours(u) {
            if covered[w.index()] {
                continue;
            }
            covered[w.index()] = true;
            current.push((u.min(w), u.max(w)));
            rec(g, covered, current, out);
            current.pop();
            covered[w.index()] = false;
        }
        covered[u.index()] = false;
    }

    rec(g, &mut covered, &mut current, &mut out);
    out.sort_unstable();
    MatchingSet { matchings: out }
}

/// Exact set-cover decision: can at most `k` of the perfect matchings
/// cover the edge set? Branches on the least-covered uncovered edge.
pub fn coverable_by_k_matchings(
    g: &CubicGraph,
    matchings: &MatchingSet,
    k: usize,
    budget: SearchBudget,
) -> Verdict {
    let edges = g.edges();
    let edge_index = |e: &(VertexId, VertexId)| -> usize {
        edges.binary_search(e).expect("matching edge in graph")
    };
    // matchings per edge
    let mut covers: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (mi, m) in matchings.matchings.iter().enumerate() {
        for e in m {
            covers[edge_index(e)].push(mi);
        }
    }
    if covers.iter().any(|c| c.is_empty()) {
        return Verdict::False;
    }
    let mut meter = Meter::new(budget);

    fn rec(
        edges_left: &mut Vec<u64>, // bitset words over edge indices
        covers: &[Vec<usize>],
        edge_ids: &dyn Fn(usize) -> Vec<usize>, // matching -> edge indices
        k: usize,
        meter: &mut Meter,
    ) -> Option<bool> {
        // least-covered uncovered edge
        let mut pick: Option<(usize, usize)> = None;
        for (ei, c) in covers.iter().enumerate() {
            if edges_left[ei / 64] >> (ei % 64) & 1 == 1
                && (pick.is_none() || c.len() < pick.unwrap().1)
            {
                pick = Some((ei, c.len()));
            }
        }
        let Some((ei, _)) = pick else {
            return Some(true);
        };
        if k == 0 {
            return Some(false);
        }
        for &mi in &covers[ei] {
            if !meter.tick() {
                return None;
            }
            let mut removed = Vec::new();
            for e in edge_ids(mi) {
                if edges_left[e / 64] >> (e % 64) & 1 == 1 {
                    edges_left[e / 64] &= !(1u64 << (e % 64));
                    removed.push(e);
                }
            }
            match rec(edges_left, covers, edge_ids, k - 1, meter) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            for e in removed {
                edges_left[e / 64] |= 1u64 << (e % 64);
            }
        }
        Some(false)
    }

    let words = edges.len().div_ceil(64);
    let mut left = vec![0u64; words];
    for ei in 0..edges.len() {
        left[ei / 64] |= 1 << (ei % 64);
    }
    let edge_ids =
        |mi: usize| -> Vec<usize> { matchings.matchings[mi].iter().map(edge_index).collect() };
    match rec(&mut left, &covers, &edge_ids, k, &mut meter) {
        Some(true) => Verdict::True,
        Some(false) => Verdict::False,
        None => Verdict::Indeterminate,
    }
}

/// Bundled classification of one cubic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub bridgeless: bool,
    pub three_edge_colourable: Verdict,
    pub bisection: BisectionSearch,
    /// Coverability by `cover_k` perfect matchings, or `None` when skipped
    /// (the graph exceeded the default size cap and no override was given).
    pub cover: Option<Verdict>,
    pub cover_k: usize,
}

/// Graphs above this order skip the excessive-index search unless forced.
pub const COVER_DEFAULT_CAP: usize = 40;

pub fn classify_graph(
    g: &CubicGraph,
    budget: SearchBudget,
    cover_k: usize,
    force_cover: bool,
) -> Classification {
    let bridgeless = crate::graph::is_bridgeless(g.graph()) == Ok(true);
    let three = is_3_edge_colourable(g, budget);
    let bisection = brute_force_2bisection(g, budget);
    let cover = if g.n() <= COVER_DEFAULT_CAP || force_cover {
        let matchings = enumerate_perfect_matchings(g);
        Some(coverable_by_k_matchings(g, &matchings, cover_k, budget))
    } else {
        None
    };
    Classification {
        bridgeless,
        three_edge_colourable: three,
        bisection,
        cover,
        cover_k,
    }
}

impl Classification {
    pub fn report(&self) -> String {
        let class = match self.three_edge_colourable {
            Verdict::True => "I",
            Verdict::False => "II",
            Verdict::Indeterminate => "?",
        };
        let bis = match &self.bisection {
            BisectionSearch::Found(_) => "found",
            BisectionSearch::NotExists => "none",
            BisectionSearch::Indeterminate => "indeterminate",
        };
        let cover = match self.cover {
            Some(Verdict::True) => "true",
            Some(Verdict::False) => "false",
            Some(Verdict::Indeterminate) => "indeterminate",
            None => "skipped",
        };
        format!(
            "class={class} bridgeless={} 2bisection={bis} cover{}={cover}",
            self.bridgeless, self.cover_k
        )
    }
}
