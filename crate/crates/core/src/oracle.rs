//! Reference SCC implementations for differential testing. Neither shares
//! any merge logic with the solver.

use std::collections::VecDeque;

use crate::graph::{DirectedGraph, VertexId};
use crate::partition::SccPartition;

/// SCCs straight from the definition: `u` and `v` share a component iff
/// each reaches the other. One BFS per source, so O(n·(n + m)) time and
/// O(n²) memory; meant for graphs of a few hundred vertices.
pub fn reachability_partition(graph: &DirectedGraph) -> SccPartition {
    let n = graph.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    let mut queue = VecDeque::new();
    for (source, row) in reach.iter_mut().enumerate() {
        row[source] = true;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in graph.out(u) {
                if !row[w] {
                    row[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    // Label each vertex with the smallest vertex mutually reachable with it.
    let labels: Vec<VertexId> = (0..n)
        .map(|v| (0..=v).find(|&u| reach[u][v] && reach[v][u]).unwrap_or(v))
        .collect();
    SccPartition::from_labels(&labels)
}

/// Tarjan's index/lowlink algorithm with an explicit call stack.
pub fn tarjan_scc(graph: &DirectedGraph) -> SccPartition {
    const UNVISITED: usize = usize::MAX;
    let n = graph.vertex_count();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut component = vec![UNVISITED; n];
    let mut scc_stack: Vec<VertexId> = Vec::new();
    // (vertex, next neighbor position)
    let mut call_stack: Vec<(VertexId, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_component = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        scc_stack.push(root);
        on_stack[root] = true;
        call_stack.push((root, 0));

        while let Some(&mut (v, ref mut pos)) = call_stack.last_mut() {
            let out = graph.out(v);
            if let Some(&w) = out.get(*pos) {
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    scc_stack.push(w);
                    on_stack[w] = true;
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
                continue;
            }

            call_stack.pop();
            if lowlink[v] == index[v] {
                loop {
                    let w = scc_stack.pop().expect("component root is on the stack");
                    on_stack[w] = false;
                    component[w] = next_component;
                    if w == v {
                        break;
                    }
                }
                next_component += 1;
            }
            if let Some(&(parent, _)) = call_stack.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
        }
    }

    SccPartition::from_labels(&component)
}
