//! Seeded graph generators with known SCC structure.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::DirectedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid generator spec: {0}")]
pub struct InvalidSpec(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// `m` ordered pairs drawn uniformly with replacement; self-loops and
    /// duplicates allowed.
    Random { n: usize, m: usize },
    /// One directed cycle through all `n` vertices.
    Cycle { n: usize },
    /// `0 -> 1 -> ... -> n-1`.
    Path { n: usize },
    /// `m` edges, each from a lower to a higher id.
    Dag { n: usize, m: usize },
    /// `k` disjoint cycles of `n / k` consecutive vertices, each linked to
    /// the next by a single forward edge.
    CycleChain { n: usize, k: usize },
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Random { .. } => "random",
            GraphKind::Cycle { .. } => "cycle",
            GraphKind::Path { .. } => "path",
            GraphKind::Dag { .. } => "dag",
            GraphKind::CycleChain { .. } => "cycle-chain",
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            GraphKind::Random { n, .. }
            | GraphKind::Cycle { n }
            | GraphKind::Path { n }
            | GraphKind::Dag { n, .. }
            | GraphKind::CycleChain { n, .. } => n,
        }
    }

    /// Builds a kind from its name and numeric parameters, e.g.
    /// `("random", [1000, 5000])` or `("cycle-chain", [100, 10])`.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self, InvalidSpec> {
        let arity = |expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(InvalidSpec(format!(
                    "{name} takes {expected} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let kind = match name {
            "random" => {
                arity(2)?;
                GraphKind::Random {
                    n: params[0],
                    m: params[1],
                }
            }
            "cycle" => {
                arity(1)?;
                GraphKind::Cycle { n: params[0] }
            }
            "path" => {
                arity(1)?;
                GraphKind::Path { n: params[0] }
            }
            "dag" => {
                arity(2)?;
                GraphKind::Dag {
                    n: params[0],
                    m: params[1],
                }
            }
            "cycle-chain" | "cycle_chain" => {
                arity(2)?;
                GraphKind::CycleChain {
                    n: params[0],
                    k: params[1],
                }
            }
            other => return Err(InvalidSpec(format!("unknown graph kind {other:?}"))),
        };
        kind.validate()?;
        Ok(kind)
    }

    pub fn validate(&self) -> Result<(), InvalidSpec> {
        match *self {
            GraphKind::Random { n: 0, m } if m > 0 => Err(InvalidSpec(format!(
                "random: {m} edges requested on 0 vertices"
            ))),
            GraphKind::Dag { n, m } if n < 2 && m > 0 => Err(InvalidSpec(format!(
                "dag: {m} edges requested but {n} vertices admit no forward edge"
            ))),
            GraphKind::CycleChain { k: 0, .. } => {
                Err(InvalidSpec("cycle-chain: k must be positive".into()))
            }
            GraphKind::CycleChain { n, k } if n % k != 0 || n == 0 => Err(InvalidSpec(format!(
                "cycle-chain: k = {k} must divide n = {n} into non-empty cycles"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphKind::Random { n, m } | GraphKind::Dag { n, m } => {
                write!(f, "{} {n} {m}", self.name())
            }
            GraphKind::Cycle { n } | GraphKind::Path { n } => write!(f, "{} {n}", self.name()),
            GraphKind::CycleChain { n, k } => write!(f, "{} {n} {k}", self.name()),
        }
    }
}

impl FromStr for GraphKind {
    type Err = InvalidSpec;

    /// Parses `"<name> <param>..."`, the same shape `Display` prints.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut words = s.split_whitespace();
        let name = words
            .next()
            .ok_or_else(|| InvalidSpec("empty spec".into()))?;
        let params = words
            .map(|w| {
                w.parse()
                    .map_err(|_| InvalidSpec(format!("parameter {w:?} is not a count")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        GraphKind::from_parts(name, &params)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GraphKind,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GraphKind, seed: u64) -> Self {
        GeneratorSpec { kind, seed }
    }
}

/// Generates the graph described by `spec`. The same spec always yields
/// the same graph.
pub fn generate_graph(spec: &GeneratorSpec) -> Result<DirectedGraph, InvalidSpec> {
    spec.kind.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.kind.vertex_count();
    let mut graph = DirectedGraph::new(n);
    let mut add = |u, v| graph.add_edge(u, v).expect("generator edge in range");

    match spec.kind {
        GraphKind::Random { m, .. } => {
            for _ in 0..m {
                add(rng.random_range(0..n), rng.random_range(0..n));
            }
        }
        GraphKind::Cycle { .. } => {
            for u in 0..n {
                add(u, (u + 1) % n);
            }
        }
        GraphKind::Path { .. } => {
            for u in 1..n {
                add(u - 1, u);
            }
        }
        GraphKind::Dag { m, .. } => {
            for _ in 0..m {
                let a = rng.random_range(0..n);
                let mut b = rng.random_range(0..n - 1);
                if b >= a {
                    b += 1;
                }
                add(a.min(b), a.max(b));
            }
        }
        GraphKind::CycleChain { k, .. } => {
            let size = n / k;
            for block in 0..k {
                let first = block * size;
                for i in 0..size {
                    add(first + i, first + (i + 1) % size);
                }
                if block + 1 < k {
                    add(first + size - 1, first + size);
                }
            }
        }
    }
    Ok(graph)
}
