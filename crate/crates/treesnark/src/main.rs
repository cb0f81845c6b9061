//! Command-line surface: generation, solving, verification, classification
//! and export, with exit codes designed for scripting:
//! 0 success / verdict true, 1 verdict false, 2 input error,
//! 3 engine hard failure, 4 indeterminate (budget exhausted).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use treesnark::bisection::{verify, Bisection};
use treesnark::builder::build;
use treesnark::dot::to_dot;
use treesnark::error::Error;
use treesnark::gen::{gen_tree, TreeShape};
use treesnark::graph::CubicGraph;
use treesnark::graph6;
use treesnark::oracle::{
    brute_force_2bisection, classify_graph, BisectionSearch, SearchBudget, Verdict,
};
use treesnark::pole::{PoleAtlas, PoleKind};
use treesnark::solve::{solve, solve_cross_checked, traces_to_text};
use treesnark::tree::TreeSpec;

const EXIT_OK: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_ENGINE: u8 = 3;
const EXIT_INDETERMINATE: u8 = 4;

#[derive(Parser)]
#[command(name = "treesnark", version, about = "Treelike snarks and their 2-bisections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a tree specification file.
    GenTree {
        /// Number of leaves (>= 3).
        #[arg(long)]
        leaves: usize,
        /// star | caterpillar | random
        #[arg(long, default_value = "random")]
        shape: String,
        /// Seed for the random shape; fully determines the output.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout if omitted).
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Build the snark over a tree file and emit a verified 2-bisection
    /// plus its extension trace.
    Solve {
        #[arg(long)]
        tree: PathBuf,
        /// Re-run the exhaustive extension oracle at every induction step.
        #[arg(long)]
        cross_check: bool,
        /// Bisection output path; the trace goes to `<path>.trace`.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Verify a bisection file against a graph (graph6) or a tree file.
    Verify {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long)]
        bisection: PathBuf,
    },
    /// Exhaustive 2-bisection search on a graph or built tree.
    Oracle {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_secs: Option<u64>,
        /// Write the found bisection here.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Classification report: class, bridgeless, 2-bisection, matching cover.
    Classify {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_secs: Option<u64>,
        /// Cover size to test (default 4).
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Run the cover search even above the default size cap.
        #[arg(long)]
        force_cover: bool,
    },
    /// Export a built snark: graph6 (default), DOT or construction
    /// annotations.
    Export {
        #[arg(long)]
        tree: PathBuf,
        /// Emit DOT instead of graph6.
        #[arg(long)]
        dot: bool,
        /// Emit the connector/pole annotations instead of graph6.
        #[arg(long)]
        annotations: bool,
        /// Colour the DOT output with this bisection file.
        #[arg(long)]
        bisection: Option<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Dump the pole colouring catalogue.
    PoleAtlas {
        /// Restrict to one kind token (e.g. all1, bal12, unb1l2).
        #[arg(long)]
        kind: Option<String>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ExtensionFailed { .. } | Error::ExhaustionFailed => EXIT_ENGINE,
        _ => EXIT_INPUT,
    }
}

fn run(cli: Cli) -> treesnark::Result<u8> {
    match cli.command {
        Command::GenTree {
            leaves,
            shape,
            seed,
            o,
        } => {
            let shape: TreeShape = shape.parse()?;
            let tree = gen_tree(leaves, shape, seed)?;
            emit(o.as_deref(), &tree.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            tree,
            cross_check,
            o,
        } => {
            let spec = read_tree(&tree)?;
            let solved = if cross_check {
                solve_cross_checked(&spec)?
            } else {
                solve(&spec)?
            };
            let report = verify(&solved.snark.graph, &solved.bisection)?;
            let trace_text = traces_to_text(&solved.traces);
            match o {
                Some(path) => {
                    write_atomic(&path, &solved.bisection.to_text())?;
                    write_atomic(&path.with_extension(trace_ext(&path)), &trace_text)?;
                }
                None => {
                    print!("{}", solved.bisection.to_text());
                    print!("{trace_text}");
                }
            }
            Ok(if report.ok() { EXIT_OK } else { EXIT_ENGINE })
        }
        Command::Verify {
            graph,
            tree,
            bisection,
        } => {
            let g = load_cubic(graph.as_deref(), tree.as_deref())?;
            let b = Bisection::from_text(&read(&bisection)?)?;
            let report = verify(&g, &b)?;
            let verdict = report.ok();
            println!(
                "verdict={} balanced={} max_component={}",
                verdict, report.balanced, report.max_component
            );
            Ok(if verdict { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Oracle {
            graph,
            tree,
            budget_nodes,
            budget_secs,
            o,
        } => {
            let g = load_cubic(graph.as_deref(), tree.as_deref())?;
            let budget = budget_from(budget_nodes, budget_secs)?;
            match brute_force_2bisection(&g, budget) {
                BisectionSearch::Found(b) => {
                    println!("2bisection=found");
                    if let Some(path) = o {
                        write_atomic(&path, &b.to_text())?;
                    } else {
                        print!("{}", b.to_text());
                    }
                    Ok(EXIT_OK)
                }
                BisectionSearch::NotExists => {
                    println!("2bisection=none");
                    Ok(EXIT_FALSE)
                }
                BisectionSearch::Indeterminate => {
                    println!("2bisection=indeterminate");
                    Ok(EXIT_INDETERMINATE)
                }
            }
        }
        Command::Classify {
            graph,
            tree,
            budget_nodes,
            budget_secs,
            k,
            force_cover,
        } => {
            let g = load_cubic(graph.as_deref(), tree.as_deref())?;
            let budget = budget_from(budget_nodes, budget_secs)?;
            let c = classify_graph(&g, budget, k, force_cover);
            println!("{}", c.report());
            let indeterminate = c.three_edge_colourable == Verdict::Indeterminate
                || c.bisection == BisectionSearch::Indeterminate
                || c.cover == Some(Verdict::Indeterminate);
            Ok(if indeterminate {
                EXIT_INDETERMINATE
            } else {
                EXIT_OK
            })
        }
        Command::Export {
            tree,
            dot,
            annotations,
            bisection,
            o,
        } => {
            let spec = read_tree(&tree)?;
            let snark = build(&spec);
            let text = if annotations {
                snark.annotations()
            } else if dot {
                let b = bisection
                    .map(|p| -> treesnark::Result<Bisection> {
                        Bisection::from_text(&read(&p)?)
                    })
                    .transpose()?;
                to_dot(snark.graph.graph(), b.as_ref().map(|b| b.colours()))?
            } else {
                let mut s = graph6::encode(snark.graph.graph())?;
                s.push('\n');
                s
            };
            emit(o.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::PoleAtlas { kind, o } => {
            let filter = match kind {
                Some(tok) => Some(PoleKind::from_token(&tok).ok_or_else(|| {
                    Error::InvalidArgument(format!("unknown kind token `{tok}`"))
                })?),
                None => None,
            };
            emit(o.as_deref(), &PoleAtlas::get().table(filter))?;
            Ok(EXIT_OK)
        }
    }
}

fn trace_ext(path: &Path) -> String {
    match path.extension() {
        Some(e) => format!("{}.trace", e.to_string_lossy()),
        None => "trace".to_string(),
    }
}

fn budget_from(nodes: Option<u64>, secs: Option<u64>) -> treesnark::Result<SearchBudget> {
    let d = SearchBudget::default();
    SearchBudget::new(
        nodes.unwrap_or(d.max_nodes),
        secs.map_or(d.max_time, Duration::from_secs),
    )
}

fn read(path: &Path) -> treesnark::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn read_tree(path: &Path) -> treesnark::Result<TreeSpec> {
    TreeSpec::from_text(&read(path)?)
}

fn load_cubic(graph: Option<&Path>, tree: Option<&Path>) -> treesnark::Result<CubicGraph> {
    match (graph, tree) {
        (Some(p), None) => {
            let text = read(p)?;
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Error::Graph6Malformed("empty file".to_string()))?;
            CubicGraph::new(graph6::decode(line)?)
        }
        (None, Some(p)) => Ok(build(&read_tree(p)?).graph),
        _ => Err(Error::InvalidArgument(
            "exactly one of --graph and --tree is required".to_string(),
        )),
    }
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, content: &str) -> treesnark::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let io_err = |e: std::io::Error| {
        Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
    };
    let mut tmp =
        tempfile::NamedTempFile::new_in(dir.unwrap_or_else(|| Path::new("."))).map_err(io_err)?;
    std::io::Write::write_all(&mut tmp, content.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn emit(path: Option<&Path>, content: &str) -> treesnark::Result<()> {
    match path {
        Some(p) => write_atomic(p, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
