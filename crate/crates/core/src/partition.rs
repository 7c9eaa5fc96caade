use std::collections::HashMap;

use crate::graph::VertexId;

/// A partition of `0..n` into components, in canonical form: components
/// are numbered by first appearance in an ascending vertex scan, and each
/// member list is ascending. Two partitions of the same vertex set are
/// equal as set families exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SccPartition {
    component_of: Vec<usize>,
    members: Vec<Vec<VertexId>>,
}

impl SccPartition {
    /// Canonicalizes an arbitrary per-vertex labelling: vertices with equal
    /// labels share a component.
    pub fn from_labels<L>(labels: &[L]) -> Self
    where
        L: Eq + std::hash::Hash,
    {
        let mut index_of: HashMap<&L, usize> = HashMap::new();
        let mut component_of = Vec::with_capacity(labels.len());
        let mut members: Vec<Vec<VertexId>> = Vec::new();
        for (v, label) in labels.iter().enumerate() {
            let next = members.len();
            let idx = *index_of.entry(label).or_insert(next);
            if idx == next {
                members.push(Vec::new());
            }
            members[idx].push(v);
            component_of.push(idx);
        }
        SccPartition {
            component_of,
            members,
        }
    }

    /// Assembles from parts already in canonical form. Callers uphold the
    /// canonical-form invariants; debug builds check them.
    pub(crate) fn from_canonical_parts(
        component_of: Vec<usize>,
        members: Vec<Vec<VertexId>>,
    ) -> Self {
        let p = SccPartition {
            component_of,
            members,
        };
        debug_assert!(p.is_canonical());
        p
    }

    pub fn vertex_count(&self) -> usize {
        self.component_of.len()
    }

    pub fn component_count(&self) -> usize {
        self.members.len()
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component_of[v]
    }

    pub fn component_ids(&self) -> &[usize] {
        &self.component_of
    }

    pub fn members(&self) -> &[Vec<VertexId>] {
        &self.members
    }

    pub fn same_component(&self, u: VertexId, v: VertexId) -> bool {
        self.component_of[u] == self.component_of[v]
    }

    /// Checks every canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        let mut seen = vec![false; self.component_of.len()];
        for (idx, group) in self.members.iter().enumerate() {
            if group.is_empty() || !group.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
            for &v in group {
                if v >= seen.len() || seen[v] || self.component_of[v] != idx {
                    return false;
                }
                seen[v] = true;
            }
        }
        let ordered = self.members.windows(2).all(|w| w[0][0] < w[1][0]);
        ordered && seen.into_iter().all(|s| s)
    }
}
