//! Top-down certified solving: reduce to the 34-vertex base case, whose
//! 2-bisection is derived once by the exhaustive oracle, then extend back
//! up through the recorded frames.

use crate::bisection::{verify, Bisection};
use crate::builder::{build, find_near_leaves, reduce, TreelikeSnark};
use crate::error::{Error, Result};
use crate::extend::{extend, extend_exhaustive, ExtensionTrace};
use crate::oracle::{brute_force_2bisection, BisectionSearch, SearchBudget};
use crate::tree::TreeSpec;

#[derive(Debug, Clone)]
pub struct Solved {
    pub snark: TreelikeSnark,
    pub bisection: Bisection,
    /// One trace per induction step, innermost reduction first.
    pub traces: Vec<ExtensionTrace>,
}

/// Solves a tree specification: builds its treelike snark and produces a
/// verified 2-bisection by the inductive case engine.
pub fn solve(tree: &TreeSpec) -> Result<Solved> {
    solve_inner(tree, false)
}

/// As `solve`, but also runs the exhaustive extension oracle at every
/// induction step and re-verifies everything; any disagreement is an error.
pub fn solve_cross_checked(tree: &TreeSpec) -> Result<Solved> {
    solve_inner(tree, true)
}

fn solve_inner(tree: &TreeSpec, cross_check: bool) -> Result<Solved> {
    let snark = build(tree);
    if tree.leaf_count() == 3 {
        let bisection = base_bisection(&snark)?;
        if cross_check {
            let report = verify(&snark.graph, &bisection)?;
            if !report.ok() {
                return Err(Error::ExtensionFailed {
                    case: "base-case oracle output failed verification".to_string(),
                });
            }
        }
        return Ok(Solved {
            snark,
            bisection,
            traces: Vec::new(),
        });
    }
    let (x, y, u) = find_near_leaves(tree)?;
    let red = reduce(&snark, x, y, u)?;
    let sub = solve_inner(&red.tree, cross_check)?;
    let (bisection, trace) = extend(&red.frame, &sub.bisection)?;
    if cross_check {
        let exh = extend_exhaustive(&red.frame, &sub.bisection)?;
        let ok_engine = verify(&red.frame.snark.graph, &bisection)?.ok();
        let ok_exh = verify(&red.frame.snark.graph, &exh.bisection)?.ok();
        if !ok_engine || !ok_exh {
            return Err(Error::ExtensionFailed {
                case: format!("cross-check disagreement at L={}", tree.leaf_count()),
            });
        }
    }
    let mut traces = sub.traces;
    traces.push(trace);
    Ok(Solved {
        snark,
        bisection,
        traces,
    })
}

/// The base-case bisection of a 3-leaf snark, derived by the exhaustive
/// oracle (deterministic first hit in search order).
pub fn base_bisection(snark: &TreelikeSnark) -> Result<Bisection> {
    match brute_force_2bisection(&snark.graph, SearchBudget::default()) {
        BisectionSearch::Found(b) => Ok(b),
        other => Err(Error::ExtensionFailed {
            case: format!("base case oracle returned {other:?}"),
        }),
    }
}

/// Serialises traces, one line per induction step.
pub fn traces_to_text(traces: &[ExtensionTrace]) -> String {
    let mut out = String::new();
    for t in traces {
        out.push_str(&t.to_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_tree, TreeShape};
    use crate::tree::star3;

    #[test]
    fn base_case_solves_and_verifies() {
        let solved = solve(&star3()).unwrap();
        assert_eq!(solved.snark.graph.n(), 34);
        assert!(verify(&solved.snark.graph, &solved.bisection).unwrap().ok());
        assert!(solved.traces.is_empty());
    }

    #[test]
    fn base_case_is_deterministic() {
        let a = solve(&star3()).unwrap();
        let b = solve(&star3()).unwrap();
        assert_eq!(a.bisection, b.bisection);
    }

    #[test]
    fn solve_verifies_up_to_six_leaves() {
        for leaves in 3..=6usize {
            for seed in 0..4u64 {
                let tree = gen_tree(leaves, TreeShape::Random, seed).unwrap();
                let solved = solve(&tree).unwrap();
                assert!(
                    verify(&solved.snark.graph, &solved.bisection).unwrap().ok(),
                    "failed at L={leaves} seed={seed}"
                );
                assert_eq!(solved.traces.len(), leaves - 3);
            }
        }
    }

    #[test]
    fn cross_checked_solve() {
        let tree = gen_tree(5, TreeShape::Random, 7).unwrap();
        let solved = solve_cross_checked(&tree).unwrap();
        assert!(verify(&solved.snark.graph, &solved.bisection).unwrap().ok());
    }
}
