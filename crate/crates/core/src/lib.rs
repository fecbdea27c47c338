//! Exact nonnegative signed k-subdomination numbers of simple graphs.
//!
//! A function f: V → {−1, +1} is a nonnegative signed k-subdominating
//! function when f(N[v]) ≥ 0 for at least k vertices; its weight is Σ f(v).
//! This crate computes the minimum weight exactly (brute force and
//! branch-and-bound), evaluates closed-form lower bounds on it, and runs
//! verification campaigns tying the two together.

pub mod bounds;
pub mod campaign;
pub mod error;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod reference;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{parse_auto, parse_dimacs, parse_edge_list, DegreeProfile, Graph};
pub use solver::{Mode, SignAssignment, SolveResult};
