//! Eulerian trails in group-labeled multigraphs.
//!
//! Every edge of an undirected multigraph carries a formal word over the
//! generators of a group; traversing the edge backwards reads the inverse
//! word. The group itself is only reachable through a word-problem oracle
//! ([`GroupOracle`]). This crate decides whether all Eulerian trails between
//! two fixed vertices have the same label ([`decide()`]) and, when they do
//! not, builds a circuit whose reversal changes the label ([`find_witness`]).
//!
//! The [`brute`] module holds the exhaustive trail enumerator used as an
//! independent ground truth for both procedures.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod brute;
pub mod cores;
pub mod decide;
mod error;
pub mod euler;
pub mod format;
pub mod graph;
pub mod witness;

pub use algebra::{Backend, GroupOracle, OracleStats, Permutation, Symbol, Word};
pub use cores::{CorePartition, Provenance, ValidInstance};
pub use decide::{decide, decide_3ec, verify_same_label, Verdict, VerdictKind, Violation};
pub use error::{Error, Result};
pub use euler::Trail;
pub use format::{ParseError, ParsedInput};
pub use graph::{Arc, Direction, Edge, LabeledGraph, Shifting};
pub use witness::{find_witness, validate_witness, Witness, WitnessSearch};
