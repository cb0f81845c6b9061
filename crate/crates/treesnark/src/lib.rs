//! Treelike snarks: construction from tree specifications, certified
//! 2-bisections via the inductive case engine, and independent exhaustive
//! oracles for cross-checking.
//!
//! The pipeline: a [`tree::TreeSpec`] (a tree with internal degree 3 plus a
//! cyclic leaf order) is turned into a cubic bridgeless graph by
//! [`builder::build`], replacing each circuit edge with a Petersen 4-pole.
//! [`solve::solve`] produces a verified 2-bisection by reducing to the
//! 34-vertex base case and extending back up through [`extend::extend`],
//! choosing pole colourings from the exhaustively enumerated
//! [`pole::PoleAtlas`]. [`oracle`] holds the brute-force counterparts.

#![forbid(unsafe_code)]

pub mod bisection;
pub mod builder;
pub mod dot;
pub mod error;
pub mod extend;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod multipole;
pub mod oracle;
pub mod pole;
pub mod solve;
pub mod tree;
pub mod zoo;

pub use bisection::{quick_ok, verify, Bisection, VerifyReport};
pub use error::{Error, Result};
pub use graph::{Colour, CubicGraph, Graph, VertexId};
