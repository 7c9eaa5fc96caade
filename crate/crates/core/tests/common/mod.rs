#![allow(dead_code)]

use rand::Rng;
use scc_core::{
    AugmentedDisjointSet, DfsFrame, DirectedGraph, GeneratorSpec, GraphKind, SccPartition,
    TraversalObserver,
};

/// Union-find with no ranks and no compression: every vertex stores its set
/// label directly and a union relabels one whole set.
pub struct NaiveDsu {
    label: Vec<usize>,
}

impl NaiveDsu {
    pub fn new(n: usize) -> Self {
        NaiveDsu {
            label: (0..n).collect(),
        }
    }

    pub fn union(&mut self, x: usize, y: usize) {
        let (from, to) = (self.label[y], self.label[x]);
        for l in &mut self.label {
            if *l == from {
                *l = to;
            }
        }
    }

    pub fn partition(&self) -> SccPartition {
        SccPartition::from_labels(&self.label)
    }
}

/// Partition induced by a disjoint-set forest, read without compression.
pub fn forest_partition(ds: &AugmentedDisjointSet) -> SccPartition {
    let roots: Vec<usize> = (0..ds.len()).map(|v| ds.peek_root(v)).collect();
    SccPartition::from_labels(&roots)
}

/// Checks, at every observation point, that each root's stored min level
/// equals the smallest level of its members currently on the stack (or the
/// sentinel if none are stacked).
#[derive(Default)]
pub struct MinLevelAudit {
    pub observations: usize,
    pub violations: Vec<String>,
}

impl TraversalObserver for MinLevelAudit {
    fn before_neighbor(&mut self, ds: &AugmentedDisjointSet, stack: &[DfsFrame]) {
        self.observations += 1;
        let mut expected = vec![ds.sentinel_level(); ds.len()];
        for frame in stack {
            let root = ds.peek_root(frame.vertex);
            expected[root] = expected[root].min(frame.level);
        }
        for root in ds.roots() {
            let stored = ds.stored_min_level(root);
            if stored != expected[root] && self.violations.len() < 10 {
                self.violations.push(format!(
                    "root {root}: stored min level {stored}, stack says {} (stack {:?})",
                    expected[root],
                    stack
                        .iter()
                        .map(|f| (f.vertex, f.level))
                        .collect::<Vec<_>>()
                ));
            }
        }
    }
}

/// The graph on 4 vertices whose edge set is the bit pattern `mask` over
/// all 16 ordered pairs (self-loops included).
pub fn four_vertex_graph(mask: u16) -> DirectedGraph {
    let edges = (0..16)
        .filter(|bit| mask & (1 << bit) != 0)
        .map(|bit| (bit / 4, bit % 4));
    DirectedGraph::from_edges(4, edges).unwrap()
}

/// Random graph with `n` in `1..=max_n` and `m` in `0..=4n`.
pub fn random_small_graph<R: Rng>(rng: &mut R, max_n: usize) -> DirectedGraph {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(0..=4 * n);
    let seed = rng.random();
    scc_core::generate_graph(&GeneratorSpec::new(GraphKind::Random { n, m }, seed)).unwrap()
}
