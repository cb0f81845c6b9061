//! DOT export. Colour 1 renders as a filled vertex, colour 2 unfilled.

use crate::error::{Error, Result};
use crate::graph::{Colour, Graph};

pub fn to_dot(g: &Graph, colouring: Option<&[Colour]>) -> Result<String> {
    if let Some(cols) = colouring {
        if cols.len() != g.n() {
            return Err(Error::PartialColouring {
                expected: g.n(),
                got: cols.len(),
            });
        }
    }
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in g.vertices() {
        match colouring.map(|c| c[v.index()]) {
            Some(Colour::Black) => {
                out.push_str(&format!(
                    "  {v} [style=filled, fillcolor=black, fontcolor=white];\n"
                ));
            }
            Some(Colour::White) | None => {
                out.push_str(&format!("  {v};\n"));
            }
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn count_lines(s: &str, pat: &str) -> usize {
        s.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn k4_uncoloured() {
        let dot = to_dot(zoo::k4().graph(), None).unwrap();
        assert_eq!(count_lines(&dot, " -- "), 6);
        assert_eq!(dot.lines().count(), 2 + 4 + 6 + 1);
    }

    #[test]
    fn k4_coloured() {
        let cols = [Colour::Black, Colour::Black, Colour::White, Colour::White];
        let dot = to_dot(zoo::k4().graph(), Some(&cols)).unwrap();
        assert_eq!(count_lines(&dot, "fillcolor=black"), 2);
    }

    #[test]
    fn partial_colouring_rejected() {
        let cols = [Colour::Black];
        assert!(to_dot(zoo::k4().graph(), Some(&cols)).is_err());
    }
}
