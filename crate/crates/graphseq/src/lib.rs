//! Tools for working with graphic degree sequences.
//!
//! A finite sequence of positive integers is *graphic* when some simple
//! undirected graph has exactly those vertex degrees. This crate provides:
//!
//! * [`DegreeSequence`]: parsing, normalization, and formatting of sequences.
//! * [`erdos_gallai`] / [`zz_rk_criterion`]: two independent exact tests for
//!   graphicality, plus [`havel_hakimi_realize`] to build a concrete graph.
//! * [`Triple`] bounds: a quadratic sufficient condition on the extreme
//!   entries `(a, b)` and the length `n`, its sharp refinement, and the
//!   four-way residue classification that underlies the refinement.
//! * [`TwoElementSpec`]: exact graphicality for sequences taking at most two
//!   distinct values, decided by an integer discriminant.
//! * [`construct_witness`]: for triples where the sharp bound fails, an
//!   explicit nongraphic sequence with first entry `a` and last entry `b`.
//! * [`sweep`]: exhaustive cross-validation drivers that compare all of the
//!   above against brute force over large parameter ranges.

mod error;
mod graph;
mod graphicality;
mod seq;
mod verdict;

pub mod bounds;
pub mod sweep;
pub mod two_element;
pub mod witness;

pub use bounds::{case_inequality_holds, classify_case, sharp_sufficient, sharp_threshold, zz_sufficient, CaseLabel, Triple};
pub use error::Error;
pub use graph::Graph;
pub use graphicality::{eg_failing_indices, erdos_gallai, havel_hakimi_realize, zz_rk_criterion, StrongIndexProfile};
pub use seq::DegreeSequence;
pub use two_element::{uniform_graphic, TwoElementSpec};
pub use verdict::Verdict;
pub use witness::{construct_witness, WitnessReport};
