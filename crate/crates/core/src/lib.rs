//! Strongly connected components in one depth-first pass.
//!
//! The solver merges components in a union-find forest whose roots track
//! the minimum DFS stack level of their stacked members; see [`solver`].
//! Two independent reference implementations live in [`oracle`], and
//! [`bench`] counts the operations a solve performs.

pub mod bench;
pub mod dsu;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod solver;

pub use bench::{run_benchmark, BenchReport, OpCounters};
pub use dsu::{AugmentedDisjointSet, ForestError, Level};
pub use generate::{generate_graph, GeneratorSpec, GraphKind, InvalidSpec};
pub use graph::{DirectedGraph, OutOfRange, VertexId};
pub use io::{
    format_edge_list, format_partition, parse_edge_list, read_edge_list, ParseError, ReadError,
};
pub use partition::SccPartition;
pub use solver::{
    assemble_partition, dfs_visit, solve, solve_counted, solve_observed, DfsFrame,
    TraversalObserver,
};
