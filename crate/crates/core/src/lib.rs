//! Hamiltonian paths in split graphs.

pub mod bench;
pub mod cert;
pub mod format;
pub mod gen;
pub mod graph;
pub mod invariants;
pub mod oracle;
pub mod reduction;
pub mod solver;
pub mod split;
pub mod structure;
pub mod sweep;

pub use cert::{validate_certificate, Certificate, Verdict, Witness};
pub use graph::{build_graph, Graph, Vertex};
pub use solver::{solve, solve_with, SolveError, SolveOptions};
pub use split::{split_partition, SplitPartition};
