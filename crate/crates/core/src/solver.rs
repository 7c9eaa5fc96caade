//! Single-pass SCC computation over a min-level augmented disjoint set.
//!
//! Every vertex starts as its own component. A depth-first traversal walks
//! the graph; each component root remembers the smallest stack level of
//! any of its members that is still on the stack. When the traversal at
//! vertex `v` (level `L`) looks at a neighbor `w` (either already visited,
//! or just returned from), `w`'s component having a stacked member at a
//! level strictly below `L` means `w` reaches an ancestor of `v`, which
//! reaches `v`, so the two components are merged. When `v` is popped and
//! it was the shallowest stacked member of its component, that component's
//! level goes back to the sentinel.
//!
//! The traversal is driven by an explicit frame stack rather than
//! recursion, so path-shaped graphs of any length are safe.

use crate::bench::OpCounters;
use crate::dsu::{AugmentedDisjointSet, Level};
use crate::graph::{DirectedGraph, VertexId};
use crate::partition::SccPartition;

/// One vertex on the traversal stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DfsFrame {
    pub vertex: VertexId,
    pub level: Level,
    /// Index of the next out-neighbor to process.
    pub next_neighbor: usize,
}

/// Hook invoked right before each merge decision: once before every
/// out-neighbor is examined, and once more after a child frame returns
/// (before the merge check against that child).
pub trait TraversalObserver {
    fn before_neighbor(&mut self, ds: &AugmentedDisjointSet, stack: &[DfsFrame]);
}

impl TraversalObserver for () {
    #[inline]
    fn before_neighbor(&mut self, _: &AugmentedDisjointSet, _: &[DfsFrame]) {}
}

/// Strongly connected components of `graph`, in canonical form.
pub fn solve(graph: &DirectedGraph) -> SccPartition {
    solve_observed(graph, &mut OpCounters::default(), &mut ())
}

/// [`solve`] plus the operation tallies of the run.
pub fn solve_counted(graph: &DirectedGraph) -> (SccPartition, OpCounters) {
    let mut counters = OpCounters::default();
    let partition = solve_observed(graph, &mut counters, &mut ());
    (partition, counters)
}

pub fn solve_observed<O: TraversalObserver>(
    graph: &DirectedGraph,
    counters: &mut OpCounters,
    observer: &mut O,
) -> SccPartition {
    let n = graph.vertex_count();
    let mut ds = AugmentedDisjointSet::new(n);
    let mut visited = vec![false; n];
    let mut stack = Vec::new();
    for start in 0..n {
        if !visited[start] {
            traverse(
                graph,
                &mut ds,
                &mut visited,
                start,
                &mut stack,
                counters,
                observer,
            );
        }
    }
    let partition = assemble_partition(&mut ds, n);
    counters.find_link_traversals += ds.find_link_traversals();
    partition
}

/// Runs one traversal rooted at `start`, which must be unvisited. The start
/// vertex gets level 1.
///
/// Panics if `start` is out of range or if `ds`/`visited` are smaller than
/// the graph.
pub fn dfs_visit<O: TraversalObserver>(
    graph: &DirectedGraph,
    ds: &mut AugmentedDisjointSet,
    visited: &mut [bool],
    start: VertexId,
    counters: &mut OpCounters,
    observer: &mut O,
) {
    debug_assert!(!visited[start], "traversal start {start} already visited");
    let links_before = ds.find_link_traversals();
    let mut stack = Vec::new();
    traverse(graph, ds, visited, start, &mut stack, counters, observer);
    counters.find_link_traversals += ds.find_link_traversals() - links_before;
}

fn traverse<O: TraversalObserver>(
    graph: &DirectedGraph,
    ds: &mut AugmentedDisjointSet,
    visited: &mut [bool],
    start: VertexId,
    stack: &mut Vec<DfsFrame>,
    counters: &mut OpCounters,
    observer: &mut O,
) {
    debug_assert!(stack.is_empty());
    enter(ds, visited, stack, counters, start, 1);

    while let Some(frame) = stack.last_mut() {
        let (v, level) = (frame.vertex, frame.level);
        match graph.out(v).get(frame.next_neighbor) {
            Some(&w) => {
                frame.next_neighbor += 1;
                observer.before_neighbor(ds, stack);
                if visited[w] {
                    merge_check(ds, counters, v, w, level);
                } else {
                    enter(ds, visited, stack, counters, w, level + 1);
                }
            }
            None => {
                ds.reset_level(v, level);
                stack.pop();
                // Resume point of the parent: the check it would perform
                // after the recursive call on `v` returns.
                if let Some(parent) = stack.last() {
                    let (p, p_level) = (parent.vertex, parent.level);
                    observer.before_neighbor(ds, stack);
                    merge_check(ds, counters, p, v, p_level);
                }
            }
        }
    }
}

#[inline]
fn enter(
    ds: &mut AugmentedDisjointSet,
    visited: &mut [bool],
    stack: &mut Vec<DfsFrame>,
    counters: &mut OpCounters,
    v: VertexId,
    level: Level,
) {
    ds.lower_level(v, level);
    visited[v] = true;
    counters.dfs_pushes += 1;
    stack.push(DfsFrame {
        vertex: v,
        level,
        next_neighbor: 0,
    });
}

#[inline]
fn merge_check(
    ds: &mut AugmentedDisjointSet,
    counters: &mut OpCounters,
    v: VertexId,
    w: VertexId,
    level: Level,
) {
    counters.merge_checks += 1;
    if ds.min_level_at(w) < level && ds.unite(v, w) {
        counters.unions_performed += 1;
    }
}

/// Reads the final components off the forest: roots are numbered in order
/// of first appearance while scanning vertices `0..n` ascending.
pub fn assemble_partition(ds: &mut AugmentedDisjointSet, n: usize) -> SccPartition {
    debug_assert!(ds.len() >= n);
    let root_count = (0..n).filter(|&v| ds.is_root(v)).count();
    let mut index_of_root = vec![usize::MAX; n];
    let mut component_of = Vec::with_capacity(n);
    let mut members: Vec<Vec<VertexId>> = Vec::with_capacity(root_count);
    for v in 0..n {
        let root = ds.find_root(v);
        if index_of_root[root] == usize::MAX {
            index_of_root[root] = members.len();
            members.push(Vec::new());
        }
        let idx = index_of_root[root];
        members[idx].push(v);
        component_of.push(idx);
    }
    debug_assert_eq!(members.len(), root_count);
    SccPartition::from_canonical_parts(component_of, members)
}
