//! Workloads shared by the criterion benchmarks.

use scc_core::{generate_graph, DirectedGraph, GeneratorSpec, GraphKind};

pub const SEED: u64 = 0x5cc;

/// Graph families benchmarked at each size: sparse random (m = 5n), one
/// long cycle, and a chain of 100-vertex cycles.
pub fn workloads(n: usize) -> Vec<(GraphKind, DirectedGraph)> {
    [
        GraphKind::Random { n, m: 5 * n },
        GraphKind::Cycle { n },
        GraphKind::CycleChain { n, k: n / 100 },
    ]
    .into_iter()
    .map(|kind| {
        let graph = generate_graph(&GeneratorSpec::new(kind, SEED)).expect("valid workload");
        (kind, graph)
    })
    .collect()
}
