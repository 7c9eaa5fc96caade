//! Disjoint-set forest augmented with a per-set minimum DFS level.
//!
//! Union by height with full two-pass path compression. Each root also
//! carries the smallest DFS stack level of any member currently on the
//! traversal stack, or [`sentinel_level`](AugmentedDisjointSet::sentinel_level)
//! when no member is stacked. The solver uses that value to decide whether a
//! neighbor still has a stacked ancestor in its component.
//!
//! Every parent-link hop taken by `find` is tallied, which is how the
//! benchmark harness measures amortized cost.

use thiserror::Error;

use crate::graph::{OutOfRange, VertexId};

/// DFS stack depth. The first vertex of a traversal has level 1.
pub type Level = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error(transparent)]
    OutOfRange(#[from] OutOfRange),
    #[error("parent links contain a cycle through vertex {0}")]
    Cycle(VertexId),
}

#[derive(Debug, Clone)]
pub struct AugmentedDisjointSet {
    parent: Vec<VertexId>,
    height: Vec<u32>,
    min_level: Vec<Level>,
    sentinel: Level,
    link_traversals: u64,
}

impl AugmentedDisjointSet {
    /// `n` singleton sets, every min level at the sentinel.
    pub fn new(n: usize) -> Self {
        let sentinel = n + 1;
        AugmentedDisjointSet {
            parent: (0..n).collect(),
            height: vec![0; n],
            min_level: vec![sentinel; n],
            sentinel,
            link_traversals: 0,
        }
    }

    /// Builds a structure whose parent links are exactly `parents`.
    ///
    /// Heights are set to the actual tree heights, so the union-by-height
    /// bookkeeping stays consistent. Intended for exercising `find` on
    /// forests that unions alone would never produce, such as long chains.
    pub fn from_parent_forest(parents: Vec<VertexId>) -> Result<Self, ForestError> {
        let n = parents.len();
        if let Some(&vertex) = parents.iter().find(|&&p| p >= n) {
            return Err(OutOfRange {
                vertex,
                vertex_count: n,
            }
            .into());
        }

        // depth[v] once known; walk each unresolved path up to a resolved
        // vertex or a root, detecting cycles with an in-progress marker.
        const UNKNOWN: usize = usize::MAX;
        const IN_PROGRESS: usize = usize::MAX - 1;
        let mut depth = vec![UNKNOWN; n];
        let mut path = Vec::new();
        for start in 0..n {
            let mut v = start;
            while depth[v] == UNKNOWN && parents[v] != v {
                depth[v] = IN_PROGRESS;
                path.push(v);
                v = parents[v];
            }
            if depth[v] == IN_PROGRESS {
                return Err(ForestError::Cycle(v));
            }
            let mut d = if parents[v] == v && depth[v] == UNKNOWN {
                depth[v] = 0;
                0
            } else {
                depth[v]
            };
            while let Some(u) = path.pop() {
                d += 1;
                depth[u] = d;
            }
        }

        let mut height = vec![0u32; n];
        for (v, &d) in depth.iter().enumerate() {
            let mut root = v;
            while parents[root] != root {
                root = parents[root];
            }
            height[root] = height[root].max(d as u32);
        }

        let sentinel = n + 1;
        Ok(AugmentedDisjointSet {
            parent: parents,
            height,
            min_level: vec![sentinel; n],
            sentinel,
            link_traversals: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// The "infinity" level: one more than the deepest possible DFS level.
    pub fn sentinel_level(&self) -> Level {
        self.sentinel
    }

    /// Total parent-link hops taken by `find` since construction.
    pub fn find_link_traversals(&self) -> u64 {
        self.link_traversals
    }

    /// Root of `x`'s set. Compresses the traversed path onto the root.
    pub fn find(&mut self, x: VertexId) -> Result<VertexId, OutOfRange> {
        self.check(x)?;
        Ok(self.find_root(x))
    }

    /// Merges the sets of `x` and `y`. Returns `false` when they were
    /// already one set.
    ///
    /// The taller root survives; on a tie `x`'s root survives and grows by
    /// one. The survivor keeps the smaller of the two min levels.
    pub fn union_components(&mut self, x: VertexId, y: VertexId) -> Result<bool, OutOfRange> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.unite(x, y))
    }

    pub fn min_level_of(&mut self, x: VertexId) -> Result<Level, OutOfRange> {
        self.check(x)?;
        Ok(self.min_level_at(x))
    }

    pub fn lower_min_level(&mut self, x: VertexId, level: Level) -> Result<(), OutOfRange> {
        self.check(x)?;
        self.lower_level(x, level);
        Ok(())
    }

    /// Clears the set's min level back to the sentinel if it is exactly
    /// `level`. Returns whether it did.
    pub fn reset_level_if_owner(&mut self, x: VertexId, level: Level) -> Result<bool, OutOfRange> {
        self.check(x)?;
        Ok(self.reset_level(x, level))
    }

    /// Direct parent link of `x`, without compression.
    pub fn parent(&self, x: VertexId) -> Option<VertexId> {
        self.parent.get(x).copied()
    }

    pub fn is_root(&self, x: VertexId) -> bool {
        self.parent.get(x) == Some(&x)
    }

    /// Height recorded at `x`. Only meaningful when `x` is a root.
    pub fn height(&self, x: VertexId) -> Option<u32> {
        self.height.get(x).copied()
    }

    /// Root of `x` found by following links without modifying them or
    /// counting hops. Panics if `x` is out of range.
    pub fn peek_root(&self, x: VertexId) -> VertexId {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        root
    }

    /// Min level stored at `root`. Panics if `root` is out of range;
    /// the value is stale unless `root` is a root.
    pub fn stored_min_level(&self, root: VertexId) -> Level {
        self.min_level[root]
    }

    pub fn roots(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.len()).filter(|&v| self.parent[v] == v)
    }

    pub fn set_count(&self) -> usize {
        self.roots().count()
    }

    pub(crate) fn find_root(&mut self, x: VertexId) -> VertexId {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
            self.link_traversals += 1;
        }
        let mut current = x;
        while current != root {
            let next = self.parent[current];
            self.parent[current] = root;
            current = next;
        }
        root
    }

    pub(crate) fn unite(&mut self, x: VertexId, y: VertexId) -> bool {
        let mut keep = self.find_root(x);
        let mut absorb = self.find_root(y);
        if keep == absorb {
            return false;
        }
        if self.height[keep] < self.height[absorb] {
            std::mem::swap(&mut keep, &mut absorb);
        }
        if self.height[keep] == self.height[absorb] {
            self.height[keep] += 1;
        }
        self.parent[absorb] = keep;
        self.min_level[keep] = self.min_level[keep].min(self.min_level[absorb]);
        true
    }

    pub(crate) fn min_level_at(&mut self, x: VertexId) -> Level {
        let root = self.find_root(x);
        self.min_level[root]
    }

    pub(crate) fn lower_level(&mut self, x: VertexId, level: Level) {
        let root = self.find_root(x);
        self.min_level[root] = self.min_level[root].min(level);
    }

    pub(crate) fn reset_level(&mut self, x: VertexId, level: Level) -> bool {
        let root = self.find_root(x);
        if self.min_level[root] == level {
            self.min_level[root] = self.sentinel;
            true
        } else {
            false
        }
    }

    fn check(&self, x: VertexId) -> Result<(), OutOfRange> {
        if x < self.len() {
            Ok(())
        } else {
            Err(OutOfRange {
                vertex: x,
                vertex_count: self.len(),
            })
        }
    }
}
