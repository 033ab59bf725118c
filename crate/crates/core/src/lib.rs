//! Dominating trees, group Steiner trees, dominating stars and paths.
//!
//! The crate provides exact brute-force oracles for each problem, the
//! value-preserving instance transformations between them (with solution
//! lifting in both directions), greedy and heuristic approximations, a
//! seeded instance generator with equivalence suites, and a line-oriented
//! text format for instances, reduction maps and solutions.

pub mod approx;
pub mod cli;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod io;
pub mod reductions;
pub mod setcover;
pub mod solution;
pub mod weight;

pub use exact::{SolveError, SolveOutcome};
pub use graph::{GraphError, GroupFamily, Vertex, WeightedGraph};
pub use setcover::SetCoverInstance;
pub use solution::{Problem, SolutionKind, SubgraphSolution, Violation};
pub use weight::ExtWeight;
