//! Adjacency-list directed graph.
//!
//! Vertices are `0..vertex_count`. Out-neighbors are kept in insertion
//! order, and duplicate edges and self-loops are stored as given, so every
//! traversal over a graph is fully determined by the order in which its
//! edges were added.

use thiserror::Error;

/// 0-based vertex index.
pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
pub struct OutOfRange {
    pub vertex: VertexId,
    pub vertex_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl DirectedGraph {
    /// A graph with `vertex_count` isolated vertices.
    pub fn new(vertex_count: usize) -> Self {
        DirectedGraph {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge sequence, preserving its order.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, OutOfRange>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut graph = DirectedGraph::new(vertex_count);
        for (u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Appends `v` to the out-neighbors of `u`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), OutOfRange> {
        self.check(u)?;
        self.check(v)?;
        self.adjacency[u].push(v);
        self.edge_count += 1;
        Ok(())
    }

    /// Out-neighbors of `u` in insertion order.
    pub fn neighbors(&self, u: VertexId) -> Result<&[VertexId], OutOfRange> {
        self.check(u)?;
        Ok(&self.adjacency[u])
    }

    /// Unchecked variant of [`neighbors`](Self::neighbors) for hot loops.
    /// Panics if `u` is out of range.
    #[inline]
    pub(crate) fn out(&self, u: VertexId) -> &[VertexId] {
        &self.adjacency[u]
    }

    /// All edges, grouped by source vertex and in insertion order within each group.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |&v| (u, v)))
    }

    fn check(&self, vertex: VertexId) -> Result<(), OutOfRange> {
        if vertex < self.vertex_count() {
            Ok(())
        } else {
            Err(OutOfRange {
                vertex,
                vertex_count: self.vertex_count(),
            })
        }
    }
}
