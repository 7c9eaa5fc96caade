//! Operation counters and the instrumented benchmark runner.

use std::fmt;
use std::time::Instant;

use crate::generate::{generate_graph, GeneratorSpec, GraphKind, InvalidSpec};
use crate::solver::solve_counted;

/// Tallies collected during one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounters {
    /// Parent-link hops taken inside `find`.
    pub find_link_traversals: u64,
    /// Unions that actually joined two distinct sets.
    pub unions_performed: u64,
    /// Merge decisions, one per processed out-neighbor.
    pub merge_checks: u64,
    pub dfs_pushes: u64,
}

/// One benchmark run. Displays as a tab-separated line:
/// `kind n m seed wall_ns find_links unions checks pushes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub kind: GraphKind,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub seed: u64,
    pub wall_ns: u128,
    pub component_count: usize,
    pub counters: OpCounters,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.kind.name(),
            self.vertex_count,
            self.edge_count,
            self.seed,
            self.wall_ns,
            self.counters.find_link_traversals,
            self.counters.unions_performed,
            self.counters.merge_checks,
            self.counters.dfs_pushes,
        )
    }
}

/// Generates and solves `repetitions` graphs. Repetition `i` uses seed
/// `spec.seed + i`, so each report line can be reproduced on its own.
/// Only the solve is timed.
pub fn run_benchmark(
    spec: &GeneratorSpec,
    repetitions: usize,
) -> Result<Vec<BenchReport>, InvalidSpec> {
    spec.kind.validate()?;
    (0..repetitions as u64)
        .map(|rep| {
            let seed = spec.seed.wrapping_add(rep);
            let graph = generate_graph(&GeneratorSpec::new(spec.kind, seed))?;
            let start = Instant::now();
            let (partition, counters) = solve_counted(&graph);
            let wall_ns = start.elapsed().as_nanos();
            Ok(BenchReport {
                kind: spec.kind,
                vertex_count: graph.vertex_count(),
                edge_count: graph.edge_count(),
                seed,
                wall_ns,
                component_count: partition.component_count(),
                counters,
            })
        })
        .collect()
}
