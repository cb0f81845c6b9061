//! The Petersen graph, the Petersen 4-pole, and the catalogue of its
//! 2-vertex-colourings satisfying the monochromatic property (every
//! monochromatic component has at most two vertices).
//!
//! The catalogue is enumerated exhaustively from the pole structure; no
//! colouring is hand-entered. Queries select colourings by boundary tuple,
//! balance delta and per-boundary-vertex neighbour constraints.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Colour, CubicGraph, Graph, VertexId};
use crate::multipole::Multipole;

/// The four dangling edges of a Petersen 4-pole in their fixed order:
/// first/second left, first/second right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DanglingRole {
    L1,
    L2,
    R1,
    R2,
}

pub const ROLES: [DanglingRole; 4] = [
    DanglingRole::L1,
    DanglingRole::L2,
    DanglingRole::R1,
    DanglingRole::R2,
];

impl DanglingRole {
    pub fn label(self) -> &'static str {
        match self {
            DanglingRole::L1 => "l1",
            DanglingRole::L2 => "l2",
            DanglingRole::R1 => "r1",
            DanglingRole::R2 => "r2",
        }
    }

    pub fn index(self) -> usize {
        match self {
            DanglingRole::L1 => 0,
            DanglingRole::L2 => 1,
            DanglingRole::R1 => 2,
            DanglingRole::R2 => 3,
        }
    }
}

impl fmt::Display for DanglingRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The Petersen graph under the fixed canonical labelling: outer 5-cycle
/// 0..4, inner pentagram 5..9 (i adjacent to i+2 mod 5), spokes i--(i+5).
pub fn petersen_graph() -> CubicGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5usize {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    CubicGraph::from_edges(10, &edges).expect("canonical Petersen graph")
}

/// An 8-vertex 4-pole cut out of the Petersen graph, with its dangling
/// edges in role order and the map from roles to endvertices.
#[derive(Debug, Clone)]
pub struct PetersenPole {
    pub pole: Multipole,
    boundary: [VertexId; 4],
}

impl PetersenPole {
    pub fn boundary(&self, role: DanglingRole) -> VertexId {
        self.boundary[role.index()]
    }

    pub fn boundary_vertices(&self) -> [VertexId; 4] {
        self.boundary
    }

    /// Neighbours of `v` inside the pole.
    pub fn inner_neighbours(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .pole
            .inner_edges()
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Builds the canonical Petersen 4-pole by deleting the lexicographically
/// least adjacent pair (s, t) from the canonical Petersen graph. Left
/// dangling edges replace the edges originally incident to s, right ones
/// those incident to t; within each side the lower endvertex comes first.
pub fn petersen_4pole() -> PetersenPole {
    let p = petersen_graph();
    let s = VertexId(0);
    let t = p.neighbours(s)[0];

    let keep: Vec<VertexId> = p.vertices().filter(|&v| v != s && v != t).collect();
    let new_id = |old: VertexId| -> VertexId {
        VertexId::from(keep.iter().position(|&w| w == old).expect("kept vertex"))
    };

    let mut pole = Multipole::new(keep.len());
    for (u, v) in p.edges() {
        if u != s && u != t && v != s && v != t {
            pole.add_inner_edge(new_id(u), new_id(v)).expect("pole edge");
        }
    }
    let left: Vec<VertexId> = p.neighbours(s).iter().copied().filter(|&w| w != t).collect();
    let right: Vec<VertexId> = p.neighbours(t).iter().copied().filter(|&w| w != s).collect();
    let mut boundary = [VertexId(0); 4];
    for (role, old) in ROLES.iter().zip(left.iter().chain(right.iter())) {
        let end = new_id(*old);
        pole.add_dangling(role.label(), end).expect("dangling");
        boundary[role.index()] = end;
    }
    PetersenPole { pole, boundary }
}

/// Derived facts about one pole colouring: the boundary 4-tuple, the class
/// imbalance over the 8 pole vertices, and which boundary endvertices have
/// an inner neighbour of their own colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub boundary: [Colour; 4],
    pub delta: i32,
    pub same_nbr: [bool; 4],
}

/// A total 2-colouring of the pole vertices in which every monochromatic
/// component has at most two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleColouring {
    pub colours: [Colour; 8],
    pub signature: Signature,
}

impl PoleColouring {
    pub fn new(pole: &PetersenPole, colours: [Colour; 8]) -> Result<PoleColouring> {
        if let Some(size) = oversized_component(pole, &colours) {
            return Err(Error::MonochromaticViolation(size));
        }
        Ok(PoleColouring {
            colours,
            signature: signature(pole, &colours),
        })
    }

    pub fn colour_string(&self) -> String {
        self.colours.iter().map(|c| c.digit()).collect()
    }
}

fn signature(pole: &PetersenPole, colours: &[Colour; 8]) -> Signature {
    let boundary = ROLES.map(|r| colours[pole.boundary(r).index()]);
    let blacks = colours.iter().filter(|&&c| c == Colour::Black).count() as i32;
    let delta = blacks - (8 - blacks);
    let same_nbr = ROLES.map(|r| {
        let b = pole.boundary(r);
        pole.inner_neighbours(b)
            .iter()
            .any(|&w| colours[w.index()] == colours[b.index()])
    });
    Signature {
        boundary,
        delta,
        same_nbr,
    }
}

/// Returns the size of some monochromatic component larger than two, if any.
fn oversized_component(pole: &PetersenPole, colours: &[Colour; 8]) -> Option<usize> {
    let n = pole.pole.n();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![VertexId::from(start)];
        let mut size = 0usize;
        while let Some(v) = stack.pop() {
            size += 1;
            for w in pole.inner_neighbours(v) {
                if !seen[w.index()] && colours[w.index()] == colours[v.index()] {
                    seen[w.index()] = true;
                    stack.push(w);
                }
            }
        }
        if size > 2 {
            return Some(size);
        }
    }
    None
}

/// Left/right variants of the (i,i)-balanced kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The named colouring kinds of a Petersen 4-pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleKind {
    /// Only the four dangling endvertices carry the named colour.
    AllBalanced(Colour),
    /// Balanced, exactly two boundary endvertices coloured 1; the pair is
    /// the colours at the first left and first right dangling edges.
    Balanced(Colour, Colour),
    /// Balanced with equal colours at both first dangling edges; the side
    /// names which first endvertex has an inner neighbour of its colour.
    SideBalanced(Colour, Side),
    /// Unbalanced by two in favour of the majority colour; exactly one
    /// boundary endvertex deviates, at the named dangling edge.
    Unbalanced(Colour, DanglingRole),
}

impl PoleKind {
    /// Compact token, also accepted by the CLI: `all1`, `bal12`, `bal11l`,
    /// `unb1l2`, ...
    pub fn token(self) -> String {
        match self {
            PoleKind::AllBalanced(c) => format!("all{}", c.digit()),
            PoleKind::Balanced(i, j) => format!("bal{}{}", i.digit(), j.digit()),
            PoleKind::SideBalanced(c, side) => format!(
                "bal{}{}{}",
                c.digit(),
                c.digit(),
                if side == Side::Left { 'l' } else { 'r' }
            ),
            PoleKind::Unbalanced(k, role) => format!("unb{}{}", k.digit(), role.label()),
        }
    }

    pub fn from_token(tok: &str) -> Option<PoleKind> {
        let all = |c| Some(PoleKind::AllBalanced(c));
        match tok {
            "all1" => all(Colour::Black),
            "all2" => all(Colour::White),
            "bal12" => Some(PoleKind::Balanced(Colour::Black, Colour::White)),
            "bal21" => Some(PoleKind::Balanced(Colour::White, Colour::Black)),
            "bal11l" => Some(PoleKind::SideBalanced(Colour::Black, Side::Left)),
            "bal11r" => Some(PoleKind::SideBalanced(Colour::Black, Side::Right)),
            "bal22l" => Some(PoleKind::SideBalanced(Colour::White, Side::Left)),
            "bal22r" => Some(PoleKind::SideBalanced(Colour::White, Side::Right)),
            _ => {
                let rest = tok.strip_prefix("unb")?;
                let mut chars = rest.chars();
                let k = Colour::from_digit(chars.next()?)?;
                let role = match chars.as_str() {
                    "l1" => DanglingRole::L1,
                    "l2" => DanglingRole::L2,
                    "r1" => DanglingRole::R1,
                    "r2" => DanglingRole::R2,
                    _ => return None,
                };
                Some(PoleKind::Unbalanced(k, role))
            }
        }
    }
}

impl fmt::Display for PoleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Classifies a colouring into its kind, purely from the signature.
/// Returns `None` for valid colourings outside the named taxonomy.
pub fn classify(col: &PoleColouring) -> Option<PoleKind> {
    let sig = &col.signature;
    let ones = sig
        .boundary
        .iter()
        .filter(|&&c| c == Colour::Black)
        .count();
    match sig.delta {
        0 => match ones {
            4 => Some(PoleKind::AllBalanced(Colour::Black)),
            0 => Some(PoleKind::AllBalanced(Colour::White)),
            2 => {
                let (i, j) = (sig.boundary[0], sig.boundary[2]);
                if i != j {
                    return Some(PoleKind::Balanced(i, j));
                }
                // the (i,i) case: exactly one of the two first endvertices
                // has an inner neighbour of its own colour
                match (sig.same_nbr[0], sig.same_nbr[2]) {
                    (true, false) => Some(PoleKind::SideBalanced(i, Side::Left)),
                    (false, true) => Some(PoleKind::SideBalanced(i, Side::Right)),
                    _ => None,
                }
            }
            _ => None,
        },
        2 if ones == 3 => {
            let role = ROLES[sig.boundary.iter().position(|&c| c == Colour::White)?];
            Some(PoleKind::Unbalanced(Colour::Black, role))
        }
        -2 if ones == 1 => {
            let role = ROLES[sig.boundary.iter().position(|&c| c == Colour::Black)?];
            Some(PoleKind::Unbalanced(Colour::White, role))
        }
        _ => None,
    }
}

/// All 2-vertex-colourings of the pole with the monochromatic property, in
/// lexicographic order of their colour strings.
pub fn enumerate_pole_colourings(pole: &PetersenPole) -> Vec<PoleColouring> {
    let mut out = Vec::new();
    for bits in 0u32..256 {
        let colours: [Colour; 8] = std::array::from_fn(|v| {
            if (bits >> (7 - v)) & 1 == 0 {
                Colour::Black
            } else {
                Colour::White
            }
        });
        if let Ok(col) = PoleColouring::new(pole, colours) {
            out.push(col);
        }
    }
    out
}

/// Constraint on a boundary endvertex when requesting colourings: whether
/// it must or must not have an inner neighbour of its own colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NbrFlag {
    #[default]
    Any,
    MustHaveSame,
    MustNotHaveSame,
}

/// The computed catalogue: the canonical pole together with every valid
/// colouring and its kind. Built once, immutable thereafter.
pub struct PoleAtlas {
    pole: PetersenPole,
    entries: Vec<(PoleColouring, Option<PoleKind>)>,
}

impl PoleAtlas {
    pub fn get() -> &'static PoleAtlas {
        static ATLAS: OnceLock<PoleAtlas> = OnceLock::new();
        ATLAS.get_or_init(|| {
            let pole = petersen_4pole();
            let entries = enumerate_pole_colourings(&pole)
                .into_iter()
                .map(|col| {
                    let kind = classify(&col);
                    (col, kind)
                })
                .collect();
            PoleAtlas { pole, entries }
        })
    }

    pub fn pole(&self) -> &PetersenPole {
        &self.pole
    }

    pub fn entries(&self) -> &[(PoleColouring, Option<PoleKind>)] {
        &self.entries
    }

    /// All catalogued colourings matching every stated constraint, in
    /// enumeration order. Contradictory constraints yield an empty list.
    pub fn request_colouring(
        &self,
        boundary: [Option<Colour>; 4],
        delta: i32,
        flags: [NbrFlag; 4],
    ) -> Vec<&PoleColouring> {
        self.entries
            .iter()
            .map(|(col, _)| col)
            .filter(|col| {
                let sig = &col.signature;
                if sig.delta != delta {
                    return false;
                }
                for i in 0..4 {
                    if let Some(want) = boundary[i] {
                        if sig.boundary[i] != want {
                            return false;
                        }
                    }
                    match flags[i] {
                        NbrFlag::Any => {}
                        NbrFlag::MustHaveSame if !sig.same_nbr[i] => return false,
                        NbrFlag::MustNotHaveSame if sig.same_nbr[i] => return false,
                        _ => {}
                    }
                }
                true
            })
            .collect()
    }

    /// Colourings of one kind, in enumeration order; the first is the
    /// canonical representative.
    pub fn of_kind(&self, kind: PoleKind) -> Vec<&PoleColouring> {
        self.entries
            .iter()
            .filter(|(_, k)| *k == Some(kind))
            .map(|(col, _)| col)
            .collect()
    }

    pub fn fraction_unclassified(&self) -> (usize, usize) {
        let un = self.entries.iter().filter(|(_, k)| k.is_none()).count();
        (un, self.entries.len())
    }

    fn table_line(col: &PoleColouring, kind: Option<PoleKind>) -> String {
        let sig = &col.signature;
        let b: String = sig.boundary.iter().map(|c| c.digit()).collect();
        let f: String = sig
            .same_nbr
            .iter()
            .map(|&x| if x { '1' } else { '0' })
            .collect();
        format!(
            "{} boundary={} delta={:+} samenbr={} kind={}",
            col.colour_string(),
            b,
            sig.delta,
            f,
            kind.map_or_else(|| "unclassified".to_string(), |k| k.token()),
        )
    }

    /// Text table, one line per catalogued colouring.
    pub fn table(&self, kind_filter: Option<PoleKind>) -> String {
        let mut out = String::new();
        for (col, kind) in &self.entries {
            if kind_filter.is_some() && *kind != kind_filter {
                continue;
            }
            out.push_str(&Self::table_line(col, *kind));
            out.push('\n');
        }
        out
    }
}

/// The graph restricted to the pole's inner edges, for component checks.
pub fn pole_inner_graph(pole: &PetersenPole) -> Graph {
    let mut g = Graph::new(pole.pole.n());
    for &(u, v) in pole.pole.inner_edges() {
        g.add_edge(u, v).expect("pole inner edge");
    }
    g
}
