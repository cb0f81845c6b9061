//! Extension of a 2-bisection across a reduction frame.
//!
//! Given a verified 2-bisection of the reduced snark G', the engine copies
//! it through the frame correspondence, normalises by a global colour swap
//! so that the majority colour among (a1, a2, c1, c2) is 1 (ties: a1 is 1),
//! and dispatches on the boundary pattern into five cases. Each case's
//! branch table assigns the connector triples and u, optionally flips a
//! boundary vertex, and selects the colouring of the fresh pole B from the
//! atlas by boundary tuple, balance delta and neighbour flags. The result
//! is always re-verified on the whole graph.
//!
//! Orientations the case tables do not cover directly (which first/second
//! dangling edge deviates, or which side carries which colour pair) are
//! reached through two frame symmetries: the mirror that exchanges the
//! x-side with the y-side, and the subscript exchange that swaps both
//! connector pairs. Both are sound because the Petersen 4-pole has
//! automorphisms realising the corresponding dangling-edge permutations,
//! and every extension is verified globally regardless.

use std::fmt;

use crate::bisection::{quick_ok, verify, Bisection};
use crate::builder::ReductionFrame;
use crate::error::{Error, Result};
use crate::graph::{Colour, VertexId};
use crate::pole::{classify, DanglingRole, NbrFlag, PoleAtlas, PoleColouring, PoleKind, ROLES};

use Colour::{Black, White};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseId {
    I,
    II,
    III,
    IV,
    V,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseId::I => "I",
            CaseId::II => "II",
            CaseId::III => "III",
            CaseId::IV => "IV",
            CaseId::V => "V",
        })
    }
}

/// Audit record of one extension step, sufficient to replay it.
#[derive(Debug, Clone)]
pub struct ExtensionTrace {
    pub case: CaseId,
    pub branch: &'static str,
    /// Global colour swap applied by the majority normalisation.
    pub majority_swap: bool,
    /// Frame symmetries used to reach the table's orientation.
    pub mirrored: bool,
    pub subswapped: bool,
    /// Extra colour swap rolled into the symmetry transform.
    pub tau_swap: bool,
    /// Final colours at the actual roles (x1, x, x2), (y1, y, y2), u.
    pub x_triple: [Colour; 3],
    pub y_triple: [Colour; 3],
    pub u_colour: Colour,
    /// Boundary vertices whose copied colour was flipped.
    pub flips: Vec<&'static str>,
    /// Final colours of B at canonical pole vertex ids.
    pub b_colours: [Colour; 8],
    pub b_kind: Option<PoleKind>,
}

impl ExtensionTrace {
    pub fn case_label(&self) -> String {
        let mut id = format!("{}.{}", self.case, self.branch);
        if self.majority_swap || self.mirrored || self.subswapped || self.tau_swap {
            id.push('~');
            if self.majority_swap {
                id.push('n');
            }
            if self.mirrored {
                id.push('m');
            }
            if self.subswapped {
                id.push('s');
            }
            if self.tau_swap {
                id.push('c');
            }
        }
        id
    }

    pub fn to_line(&self) -> String {
        let flips = if self.flips.is_empty() {
            "-".to_string()
        } else {
            self.flips.join(",")
        };
        let kind = self
            .b_kind
            .map_or_else(|| "unclassified".to_string(), |k| k.token());
        format!("case {} flips={flips} B={kind}", self.case_label())
    }
}

/// Parsed form of one trace line, for round-tripping trace files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub case_label: String,
    pub flips: Vec<String>,
    pub kind: String,
}

impl TraceRecord {
    pub fn from_line(line: &str) -> Result<TraceRecord> {
        let err = |msg: &str| Error::Parse {
            format: "trace",
            line: 0,
            msg: msg.to_string(),
        };
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() != 4 || words[0] != "case" {
            return Err(err("expected `case <id> flips=<subset> B=<kind>`"));
        }
        let flips_part = words[2]
            .strip_prefix("flips=")
            .ok_or_else(|| err("missing flips field"))?;
        let flips = if flips_part == "-" {
            Vec::new()
        } else {
            flips_part.split(',').map(str::to_string).collect()
        };
        let kind = words[3]
            .strip_prefix("B=")
            .ok_or_else(|| err("missing B field"))?
            .to_string();
        Ok(TraceRecord {
            case_label: words[1].to_string(),
            flips,
            kind,
        })
    }

    pub fn to_line(&self) -> String {
        let flips = if self.flips.is_empty() {
            "-".to_string()
        } else {
            self.flips.join(",")
        };
        format!("case {} flips={} B={}", self.case_label, flips, self.kind)
    }
}

/// Roles of the induction step, named as in the case tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    X1,
    X,
    X2,
    Y1,
    Y,
    Y2,
    U,
    A1,
    A2,
}

/// Orientation view: resolves table roles to actual frame vertices under
/// the mirror / subscript-exchange symmetries, and translates colours when
/// the transform includes the extra swap.
#[derive(Debug, Clone, Copy, Default)]
struct View {
    mirror: bool,
    subswap: bool,
    tau_swap: bool,
}

impl View {
    fn col(self, c: Colour) -> Colour {
        if self.tau_swap {
            c.swapped()
        } else {
            c
        }
    }

    fn resolve(self, f: &ReductionFrame, role: Role) -> VertexId {
        let pick = |a: VertexId, b: VertexId| if self.subswap { b } else { a };
        let side = |x_side: (VertexId, VertexId), y_side: (VertexId, VertexId)| {
            let (p, q) = if self.mirror { y_side } else { x_side };
            pick(p, q)
        };
        match role {
            Role::X => {
                if self.mirror {
                    f.y
                } else {
                    f.x
                }
            }
            Role::Y => {
                if self.mirror {
                    f.x
                } else {
                    f.y
                }
            }
            Role::U => f.u,
            Role::X1 => side((f.x1, f.x2), (f.y1, f.y2)),
            Role::X2 => side((f.x2, f.x1), (f.y2, f.y1)),
            Role::Y1 => side((f.y1, f.y2), (f.x1, f.x2)),
            Role::Y2 => side((f.y2, f.y1), (f.x2, f.x1)),
            Role::A1 => side((f.a1, f.a2), (f.c1, f.c2)),
            Role::A2 => side((f.a2, f.a1), (f.c2, f.c1)),
        }
    }

    /// z-side connectors of G' under the subscript exchange.
    fn resolve_z1(self, f: &ReductionFrame) -> VertexId {
        if self.subswap {
            f.z2
        } else {
            f.z1
        }
    }

    fn resolve_z2(self, f: &ReductionFrame) -> VertexId {
        if self.subswap {
            f.z1
        } else {
            f.z2
        }
    }

    /// Canonical dangling role of B joined to the table's role slot.
    fn b_role(self, table_role: DanglingRole) -> DanglingRole {
        use DanglingRole::*;
        let (left, sub) = match table_role {
            L1 => (true, 1),
            L2 => (true, 2),
            R1 => (false, 1),
            R2 => (false, 2),
        };
        let left = left ^ self.mirror;
        let sub = if self.subswap { 3 - sub } else { sub };
        match (left, sub) {
            (true, 1) => L1,
            (true, 2) => L2,
            (false, 1) => R1,
            (false, 2) => R2,
            _ => unreachable!(),
        }
    }
}

/// One branch table entry: the connector triples, the colour of u, the
/// boundary vertices to flip, and the pole requests to try in order.
struct Plan {
    x: [Colour; 3],
    y: [Colour; 3],
    u: Colour,
    flips: Vec<Role>,
    /// Alternatives for B, each a boundary tuple in table role order plus
    /// the balance delta B must contribute.
    alts: Vec<([Colour; 4], i32)>,
}

/// Extends a verified 2-bisection of G' to one of G following the case
/// tables, and returns it together with the replayable trace. Fails loudly
/// if no catalogue candidate verifies.
pub fn extend(frame: &ReductionFrame, reduced_bisection: &Bisection) -> Result<(Bisection, ExtensionTrace)> {
    let report = verify(&frame.reduced.graph, reduced_bisection)?;
    if !report.ok() {
        return Err(Error::InvalidArgument(
            "the reduced colouring is not a 2-bisection".to_string(),
        ));
    }

    let g = &frame.snark.graph;
    let n = g.n();

    // copy through the correspondence
    let mut copied: Vec<Option<Colour>> = vec![None; n];
    for w in frame.reduced.graph.vertices() {
        if let Some(target) = frame.map[w.index()] {
            copied[target.index()] = Some(reduced_bisection.colour(w));
        }
    }

    // majority normalisation
    let raw_pattern: Vec<Colour> = [frame.a1, frame.a2, frame.c1, frame.c2]
        .iter()
        .map(|r| copied[r.index()].expect("boundary is copied"))
        .collect();
    let blacks = raw_pattern.iter().filter(|&&c| c == Black).count();
    let majority_swap = blacks < 2 || (blacks == 2 && raw_pattern[0] != Black);
    if majority_swap {
        for c in copied.iter_mut().flatten() {
            *c = c.swapped();
        }
    }
    let norm = |c: Colour| if majority_swap { c.swapped() } else { c };
    let zside = |v: VertexId| norm(reduced_bisection.colour(v));

    let pattern: [Colour; 4] = std::array::from_fn(|i| {
        let r = [frame.a1, frame.a2, frame.c1, frame.c2][i];
        copied[r.index()].expect("boundary is copied")
    });
    let pattern_blacks = pattern.iter().filter(|&&c| c == Black).count();

    // dispatch: case and orientation transform
    let (case, view) = match pattern_blacks {
        4 => (CaseId::I, View::default()),
        3 => {
            let dev = pattern
                .iter()
                .position(|&c| c == White)
                .expect("three blacks, one white");
            let view = match dev {
                3 => View::default(),
                2 => View {
                    subswap: true,
                    ..View::default()
                },
                1 => View {
                    mirror: true,
                    ..View::default()
                },
                _ => View {
                    mirror: true,
                    subswap: true,
                    ..View::default()
                },
            };
            (CaseId::V, view)
        }
        2 => {
            debug_assert_eq!(pattern[0], Black);
            if pattern[1] == Black {
                // a-pair vs c-pair
                let view = if zside(frame.z1) == White {
                    View::default()
                } else {
                    View {
                        mirror: true,
                        tau_swap: true,
                        ..View::default()
                    }
                };
                (CaseId::II, view)
            } else if pattern[2] == Black {
                // first-first
                let view = if copied[frame.v.index()] == Some(Black) {
                    View::default()
                } else {
                    View {
                        subswap: true,
                        tau_swap: true,
                        ..View::default()
                    }
                };
                (CaseId::III, view)
            } else {
                // first-second diagonal
                debug_assert_eq!(pattern[3], Black);
                let view = if zside(frame.z1) == White {
                    View::default()
                } else {
                    View {
                        subswap: true,
                        tau_swap: true,
                        ..View::default()
                    }
                };
                (CaseId::IV, view)
            }
        }
        _ => unreachable!("majority normalisation guarantees at least two blacks"),
    };

    // table-space readings
    let tcol = |v: VertexId| view.col(copied[v.index()].expect("copied vertex"));
    let tz = |v: VertexId| view.col(zside(v));
    let v_colour = tcol(frame.v);
    let z_colour = tz(frame.z);
    let z1_colour = tz(view.resolve_z1(frame));
    let z2_colour = tz(view.resolve_z2(frame));

    // `role` has a neighbour of the given table colour inside its own pole
    // (its neighbours minus the connector it joins)
    let pole_nbr_has = |role: Role, partner: Role, colour: Colour| -> bool {
        let v = view.resolve(frame, role);
        let p = view.resolve(frame, partner);
        g.neighbours(v)
            .iter()
            .any(|&w| w != p && copied[w.index()].map(|c| view.col(c)) == Some(colour))
    };

    let (branch, plan): (&'static str, Plan) = match case {
        CaseId::I => {
            debug_assert_eq!((z1_colour, z_colour, z2_colour), (White, Black, White));
            if v_colour == Black {
                (
                    "a",
                    Plan {
                        x: [White, Black, White],
                        y: [White, Black, White],
                        u: White,
                        flips: vec![],
                        alts: vec![([Black, Black, Black, White], 2)],
                    },
                )
            } else if !pole_nbr_has(Role::A2, Role::X2, Black) {
                (
                    "b0",
                    Plan {
                        x: [White, White, Black],
                        y: [White, Black, White],
                        u: Black,
                        flips: vec![],
                        alts: vec![([Black, White, Black, White], 0)],
                    },
                )
            } else {
                (
                    "b1",
                    Plan {
                        x: [White, White, Black],
                        y: [White, Black, White],
                        u: Black,
                        flips: vec![Role::A2],
                        alts: vec![([Black, White, Black, Black], 2)],
                    },
                )
            }
        }
        CaseId::II => {
            debug_assert_eq!((z1_colour, z_colour, z2_colour), (White, Black, White));
            if v_colour == Black {
                (
                    "a",
                    Plan {
                        x: [White, Black, White],
                        y: [White, Black, White],
                        u: White,
                        flips: vec![],
                        alts: vec![
                            ([Black, White, Black, Black], 2),
                            ([White, Black, Black, Black], 2),
                        ],
                    },
                )
            } else {
                (
                    "b",
                    Plan {
                        x: [White, Black, White],
                        y: [Black, White, Black],
                        u: Black,
                        flips: vec![],
                        alts: vec![([White, Black, White, White], -2)],
                    },
                )
            }
        }
        CaseId::III => {
            debug_assert_eq!((z1_colour, z2_colour), (White, Black));
            debug_assert_eq!((v_colour, z_colour), (Black, White));
            if !pole_nbr_has(Role::A1, Role::X1, Black) {
                (
                    "a0",
                    Plan {
                        x: [Black, White, Black],
                        y: [White, Black, Black],
                        u: White,
                        flips: vec![],
                        alts: vec![([White, White, Black, White], -2)],
                    },
                )
            } else {
                (
                    "a1",
                    Plan {
                        x: [Black, White, Black],
                        y: [White, Black, Black],
                        u: White,
                        flips: vec![Role::A1],
                        alts: vec![([White, White, White, White], 0)],
                    },
                )
            }
        }
        CaseId::IV => {
            debug_assert_eq!((z1_colour, z_colour, z2_colour), (White, Black, White));
            if v_colour == Black {
                (
                    "a",
                    Plan {
                        x: [White, Black, White],
                        y: [White, Black, White],
                        u: White,
                        flips: vec![],
                        alts: vec![([White, Black, Black, Black], 2)],
                    },
                )
            } else {
                (
                    "b",
                    Plan {
                        x: [White, White, Black],
                        y: [White, Black, White],
                        u: Black,
                        flips: vec![],
                        alts: vec![([Black, Black, Black, Black], 0)],
                    },
                )
            }
        }
        CaseId::V => {
            debug_assert_eq!(z1_colour, White);
            match (v_colour, z_colour, z2_colour) {
                (Black, Black, White) => (
                    "a",
                    Plan {
                        x: [White, Black, White],
                        y: [White, Black, White],
                        u: White,
                        flips: vec![],
                        alts: vec![([Black, Black, White, Black], 2)],
                    },
                ),
                (Black, White, Black) => (
                    "b",
                    Plan {
                        x: [White, Black, White],
                        y: [White, Black, Black],
                        u: White,
                        flips: vec![],
                        alts: vec![([Black, White, Black, White], 0)],
                    },
                ),
                (White, Black, White) => (
                    "c",
                    Plan {
                        x: [White, Black, White],
                        y: [White, White, Black],
                        u: Black,
                        flips: vec![],
                        alts: vec![([Black, Black, Black, Black], 0)],
                    },
                ),
                other => {
                    return Err(Error::ExtensionFailed {
                        case: format!("V with impossible (v,z,z2) colours {other:?}"),
                    })
                }
            }
        }
    };

    // apply the plan in normalised colour space
    let mut working = copied.clone();
    let triples = [
        (Role::X1, plan.x[0]),
        (Role::X, plan.x[1]),
        (Role::X2, plan.x[2]),
        (Role::Y1, plan.y[0]),
        (Role::Y, plan.y[1]),
        (Role::Y2, plan.y[2]),
        (Role::U, plan.u),
    ];
    for (role, colour) in triples {
        working[view.resolve(frame, role).index()] = Some(view.col(colour));
    }
    let mut flip_names: Vec<&'static str> = Vec::new();
    for role in &plan.flips {
        let v = view.resolve(frame, *role);
        let c = working[v.index()].expect("flipped vertex is coloured");
        working[v.index()] = Some(c.swapped());
        flip_names.push(actual_role_name(frame, v));
    }

    let atlas = PoleAtlas::get();
    let join_partner = |role: DanglingRole| -> VertexId {
        match role {
            DanglingRole::L1 => frame.x1,
            DanglingRole::L2 => frame.x2,
            DanglingRole::R1 => frame.y1,
            DanglingRole::R2 => frame.y2,
        }
    };

    for (table_boundary, table_delta) in &plan.alts {
        // translate the table request into canonical pole roles
        let mut boundary = [None; 4];
        for (i, role) in ROLES.iter().enumerate() {
            let canonical = view.b_role(*role);
            boundary[canonical.index()] = Some(view.col(table_boundary[i]));
        }
        let delta = if view.tau_swap {
            -table_delta
        } else {
            *table_delta
        };
        // a boundary endvertex matching its join partner's colour must not
        // extend a monochromatic pair into the pole
        let flags: [NbrFlag; 4] = std::array::from_fn(|i| {
            let role = ROLES[i];
            let partner = join_partner(role);
            if working[partner.index()] == boundary[i] {
                NbrFlag::MustNotHaveSame
            } else {
                NbrFlag::Any
            }
        });
        for cand in atlas.request_colouring(boundary, delta, flags) {
            for k in 0..8 {
                working[frame.b_verts[k].index()] = Some(cand.colours[k]);
            }
            let colours: Vec<Colour> = working
                .iter()
                .map(|c| c.expect("total after pole assignment"))
                .collect();
            if quick_ok(g.graph(), &colours) {
                let final_colours: Vec<Colour> = colours
                    .iter()
                    .map(|&c| if majority_swap { c.swapped() } else { c })
                    .collect();
                let bisection = Bisection::new(final_colours);
                let report = verify(g, &bisection).expect("total colouring");
                assert!(report.ok(), "quick check and verifier must agree");
                let read3 = |a: VertexId, b: VertexId, c: VertexId| {
                    [
                        bisection.colour(a),
                        bisection.colour(b),
                        bisection.colour(c),
                    ]
                };
                let b_colours: [Colour; 8] =
                    std::array::from_fn(|k| bisection.colour(frame.b_verts[k]));
                let b_kind = PoleColouring::new(atlas.pole(), b_colours)
                    .ok()
                    .and_then(|pc| classify(&pc));
                let trace = ExtensionTrace {
                    case,
                    branch,
                    majority_swap,
                    mirrored: view.mirror,
                    subswapped: view.subswap,
                    tau_swap: view.tau_swap,
                    x_triple: read3(frame.x1, frame.x, frame.x2),
                    y_triple: read3(frame.y1, frame.y, frame.y2),
                    u_colour: bisection.colour(frame.u),
                    flips: flip_names,
                    b_colours,
                    b_kind,
                };
                return Ok((bisection, trace));
            }
        }
    }
    Err(Error::ExtensionFailed {
        case: format!("{case}.{branch}"),
    })
}

fn actual_role_name(frame: &ReductionFrame, v: VertexId) -> &'static str {
    if v == frame.a1 {
        "a1"
    } else if v == frame.a2 {
        "a2"
    } else if v == frame.c1 {
        "c1"
    } else {
        debug_assert_eq!(v, frame.c2);
        "c2"
    }
}

/// Replays a trace against the frame and the reduced bisection, rebuilding
/// the extended bisection it records.
pub fn replay(
    frame: &ReductionFrame,
    reduced_bisection: &Bisection,
    trace: &ExtensionTrace,
) -> Bisection {
    let n = frame.snark.graph.n();
    let mut colours: Vec<Option<Colour>> = vec![None; n];
    for w in frame.reduced.graph.vertices() {
        if let Some(target) = frame.map[w.index()] {
            colours[target.index()] = Some(reduced_bisection.colour(w));
        }
    }
    for name in &trace.flips {
        let v = match *name {
            "a1" => frame.a1,
            "a2" => frame.a2,
            "c1" => frame.c1,
            _ => frame.c2,
        };
        let c = colours[v.index()].expect("flipped vertex is copied");
        colours[v.index()] = Some(c.swapped());
    }
    for (v, c) in [
        (frame.x1, trace.x_triple[0]),
        (frame.x, trace.x_triple[1]),
        (frame.x2, trace.x_triple[2]),
        (frame.y1, trace.y_triple[0]),
        (frame.y, trace.y_triple[1]),
        (frame.y2, trace.y_triple[2]),
        (frame.u, trace.u_colour),
    ] {
        colours[v.index()] = Some(c);
    }
    for k in 0..8 {
        colours[frame.b_verts[k].index()] = Some(trace.b_colours[k]);
    }
    Bisection::new(colours.into_iter().map(|c| c.expect("total")).collect())
}

/// Outcome of the exhaustive fallback search.
#[derive(Debug, Clone)]
pub struct ExhaustiveOutcome {
    pub bisection: Bisection,
    /// Candidates considered (including bulk-rejected ones); bounded by
    /// 2^8 * 2^7 * 2^4.
    pub candidates_explored: u64,
}

/// Independent oracle for the extension step: exhaustive search over the
/// colours of B's eight vertices, the seven fresh frame vertices, and all
/// flip subsets of {a1, a2, c1, c2}, verifying each candidate globally.
/// Returns the first verified bisection in deterministic order.
pub fn extend_exhaustive(
    frame: &ReductionFrame,
    reduced_bisection: &Bisection,
) -> Result<ExhaustiveOutcome> {
    let report = verify(&frame.reduced.graph, reduced_bisection)?;
    if !report.ok() {
        return Err(Error::InvalidArgument(
            "the reduced colouring is not a 2-bisection".to_string(),
        ));
    }
    let g = &frame.snark.graph;
    let n = g.n();
    let mut copied: Vec<Option<Colour>> = vec![None; n];
    for w in frame.reduced.graph.vertices() {
        if let Some(target) = frame.map[w.index()] {
            copied[target.index()] = Some(reduced_bisection.colour(w));
        }
    }
    let base_balance: i64 = copied
        .iter()
        .flatten()
        .map(|&c| if c == Black { 1i64 } else { -1 })
        .sum();

    // pole-interior validity of each of the 256 colourings of B; interior
    // violations survive any completion, so they are skipped in bulk
    let atlas = PoleAtlas::get();
    let pole = atlas.pole();
    let mut interior_ok = [false; 256];
    for bits in 0u32..256 {
        let cols: [Colour; 8] =
            std::array::from_fn(|k| if (bits >> k) & 1 == 0 { Black } else { White });
        interior_ok[bits as usize] = PoleColouring::new(pole, cols).is_ok();
    }

    let flip_targets = [frame.a1, frame.a2, frame.c1, frame.c2];
    let fresh = [
        frame.x1, frame.x, frame.x2, frame.u, frame.y, frame.y1, frame.y2,
    ];
    let mut working = copied.clone();
    let mut explored: u64 = 0;

    for flip_mask in 0u32..16 {
        let mut flip_balance = base_balance;
        for (i, &t) in flip_targets.iter().enumerate() {
            if (flip_mask >> i) & 1 == 1 {
                let c = copied[t.index()].expect("boundary copied");
                working[t.index()] = Some(c.swapped());
                flip_balance += if c == Black { -2 } else { 2 };
            } else {
                working[t.index()] = copied[t.index()];
            }
        }
        for b_mask in 0u32..256 {
            if !interior_ok[b_mask as usize] {
                explored += 128;
                continue;
            }
            let b_blacks = 8 - b_mask.count_ones() as i64;
            for f_mask in 0u32..128 {
                explored += 1;
                let f_blacks = 7 - f_mask.count_ones() as i64;
                if flip_balance + (2 * b_blacks - 8) + (2 * f_blacks - 7) != 0 {
                    continue;
                }
                for k in 0..8 {
                    working[frame.b_verts[k].index()] =
                        Some(if (b_mask >> k) & 1 == 0 { Black } else { White });
                }
                for (i, &v) in fresh.iter().enumerate() {
                    working[v.index()] =
                        Some(if (f_mask >> i) & 1 == 0 { Black } else { White });
                }
                let colours: Vec<Colour> =
                    working.iter().map(|c| c.expect("total")).collect();
                if quick_ok(g.graph(), &colours) {
                    let bisection = Bisection::new(colours);
                    debug_assert!(verify(g, &bisection).unwrap().ok());
                    return Ok(ExhaustiveOutcome {
                        bisection,
                        candidates_explored: explored,
                    });
                }
            }
        }
    }
    Err(Error::ExhaustionFailed)
}
