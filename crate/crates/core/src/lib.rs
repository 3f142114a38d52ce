//! Exact solvers, bounds, constructions and a hardness reduction for
//! p-strong Roman domination.
//!
//! A labeling `f: V -> {0, ..., ⌈Δ/p⌉ + 1}` is a p-strong Roman dominating
//! function when every vertex labeled 0 has a neighbour `v` with
//! `f(v) >= 1 + ⌈|N(v) ∩ B0| / p⌉`, where `B0` is the set of zeros.

pub mod bounds;
pub mod families;
pub mod graph;
pub mod heuristics;
pub mod model;
pub mod par;
pub mod reduction;
pub mod solver;
pub mod suite;

pub use graph::{generate, FamilySpec, Graph, GraphError};
pub use model::{validate, LabelFunction, ModelClass, ValidationReport};
pub use solver::{solve_exact, solve_naive, SolveResult, SolverConfig};
