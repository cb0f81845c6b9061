//! Bisections of cubic graphs and their verification.
//!
//! A 2-bisection is a balanced 2-colouring in which every monochromatic
//! component is a single vertex or an edge. `verify` labels components
//! explicitly and reports offenders; `quick_ok` decides the same predicate
//! through the local degree rule (no vertex may have two neighbours of its
//! own colour), which is what the search loops use.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Colour, CubicGraph, Graph, VertexId};

/// A total 2-colouring of a graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bisection {
    colours: Vec<Colour>,
}

impl Bisection {
    pub fn new(colours: Vec<Colour>) -> Bisection {
        Bisection { colours }
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, v: VertexId) -> Colour {
        self.colours[v.index()]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn class_sizes(&self) -> (usize, usize) {
        let blacks = self
            .colours
            .iter()
            .filter(|&&c| c == Colour::Black)
            .count();
        (blacks, self.colours.len() - blacks)
    }

    pub fn swapped(&self) -> Bisection {
        Bisection {
            colours: self.colours.iter().map(|c| c.swapped()).collect(),
        }
    }

    pub fn colour_string(&self) -> String {
        self.colours.iter().map(|c| c.digit()).collect()
    }

    /// Serialises to the bisection file format.
    pub fn to_text(&self) -> String {
        format!("bisection {}\n{}\n", self.len(), self.colour_string())
    }

    pub fn from_text(text: &str) -> Result<Bisection> {
        let err = |line: usize, msg: &str| Error::Parse {
            format: "bisection",
            line,
            msg: msg.to_string(),
        };
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| err(0, "empty input"))?;
        let n: usize = header
            .strip_prefix("bisection ")
            .ok_or_else(|| err(1, "missing `bisection <n>` header"))?
            .trim()
            .parse()
            .map_err(|_| err(1, "vertex count is not a number"))?;
        let body = lines.next().ok_or_else(|| err(2, "missing colour string"))?;
        let colours: Option<Vec<Colour>> =
            body.trim().chars().map(Colour::from_digit).collect();
        let colours = colours.ok_or_else(|| err(2, "colours must be 1 or 2"))?;
        if colours.len() != n {
            return Err(Error::PartialColouring {
                expected: n,
                got: colours.len(),
            });
        }
        Ok(Bisection { colours })
    }
}

/// The verification report: balance, monochromatic component census, and
/// the offending components if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub balanced: bool,
    pub class_sizes: (usize, usize),
    pub max_component: usize,
    /// Monochromatic component count by size.
    pub census: BTreeMap<usize, usize>,
    /// Components with more than two vertices.
    pub offending: Vec<Vec<VertexId>>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.balanced && self.max_component <= 2
    }
}

/// Verifies a bisection by explicit monochromatic component labelling.
pub fn verify(g: &CubicGraph, b: &Bisection) -> Result<VerifyReport> {
    verify_graph(g.graph(), b)
}

pub(crate) fn verify_graph(g: &Graph, b: &Bisection) -> Result<VerifyReport> {
    if b.len() != g.n() {
        return Err(Error::PartialColouring {
            expected: g.n(),
            got: b.len(),
        });
    }
    let mut seen = vec![false; g.n()];
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    let mut offending = Vec::new();
    let mut max_component = 0;
    for start in g.vertices() {
        if seen[start.index()] {
            continue;
        }
        seen[start.index()] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbours(u) {
                if !seen[w.index()] && b.colour(w) == b.colour(u) {
                    seen[w.index()] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        max_component = max_component.max(comp.len());
        *census.entry(comp.len()).or_default() += 1;
        if comp.len() > 2 {
            comp.sort_unstable();
            offending.push(comp);
        }
    }
    let class_sizes = b.class_sizes();
    Ok(VerifyReport {
        balanced: class_sizes.0 == class_sizes.1,
        class_sizes,
        max_component,
        census,
        offending,
    })
}

/// The local form of the same predicate: balanced, and no vertex has two
/// or more neighbours of its own colour. Equivalent to `verify(..).ok()`
/// because any monochromatic component on three or more vertices contains
/// a vertex with two same-coloured neighbours.
pub fn quick_ok(g: &Graph, colours: &[Colour]) -> bool {
    debug_assert_eq!(colours.len(), g.n());
    let mut blacks = 0usize;
    for v in g.vertices() {
        let c = colours[v.index()];
        if c == Colour::Black {
            blacks += 1;
        }
        let same = g
            .neighbours(v)
            .iter()
            .filter(|w| colours[w.index()] == c)
            .count();
        if same >= 2 {
            return false;
        }
    }
    2 * blacks == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pole::petersen_graph;
    use crate::zoo;

    fn bis(s: &str) -> Bisection {
        Bisection::new(s.chars().map(|c| Colour::from_digit(c).unwrap()).collect())
    }

    #[test]
    fn k4_paired_colouring_is_a_2_bisection() {
        let g = zoo::k4();
        let report = verify(&g, &bis("1122")).unwrap();
        assert!(report.ok());
        assert_eq!(report.census, BTreeMap::from([(2, 2)]));
    }

    #[test]
    fn petersen_cycle_split_fails_with_component_of_five() {
        let g = petersen_graph();
        let report = verify(&g, &bis("1111122222")).unwrap();
        assert!(!report.ok());
        assert_eq!(report.max_component, 5);
        assert!(report.balanced);
        assert_eq!(report.offending.len(), 2);
    }

    #[test]
    fn unbalanced_colouring_fails() {
        let g = zoo::k4();
        let report = verify(&g, &bis("1112")).unwrap();
        assert!(!report.ok());
        assert!(!report.balanced);
       assert_eq!(report.class_sizes, (3, 1));
    }

    #[test]
    fn partial_colouring_rejected() {
        let g = zoo::k4();
        assert!(matches!(
            verify(&g, &bis("112")),
            Err(Error::PartialColouring { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn swap_invariance() {
        let g = petersen_graph();
        for s in ["1111122222", "1212121212", "1122112212"] {
            let b = bis(s);
            assert_eq!(
                verify(&g, &b).unwrap().ok(),
                verify(&g, &b.swapped()).unwrap().ok()
            );
        }
    }

    #[test]
    fn file_round_trip() {
        let b = bis("1122");
        assert_eq!(Bisection::from_text(&b.to_text()).unwrap(), b);
        assert!(Bisection::from_text("bisection 4\n113\n").is_err());
        assert!(Bisection::from_text("bisection 4\n112\n").is_err());
    }

    #[test]
    fn quick_rule_matches_component_labelling() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..60 {
            let g = crate::gen::random_cubic(10, &mut rng);
            for mask in 0u32..1024 {
                let colours: Vec<Colour> = (0..10)
                    .map(|v| {
                        if (mask >> v) & 1 == 0 {
                            Colour::Black
                        } else {
                            Colour::White
                        }
                    })
                    .collect();
                let b = Bisection::new(colours.clone());
                assert_eq!(
                    quick_ok(g.graph(), &colours),
                    verify(&g, &b).unwrap().ok(),
                );
            }
        }
    }
}
