//! Text formats.
//!
//! Input is a whitespace-separated edge list: a header `n m` followed by
//! exactly `m` pairs `u v` of 1-based vertex ids. Any mix of spaces and
//! newlines separates tokens.
//!
//! Output is the component listing: the component count on the first line,
//! then one line per component with each 1-based member followed by a
//! single space (so every non-empty line ends in `" \n"`).

use std::fmt::Write as _;
use std::io::{self, Read, Write};

use thiserror::Error;

use crate::graph::DirectedGraph;
use crate::partition::SccPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("header must start with two non-negative integers (vertex and edge counts)")]
    MalformedHeader,
    #[error("header declares {declared} edges but the body holds {found} endpoint tokens")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("edge {edge}: endpoint {value} outside 1..={vertex_count}")]
    EndpointOutOfRange {
        edge: usize,
        value: i64,
        vertex_count: usize,
    },
    #[error("token {token:?} at position {position} is not an integer")]
    TokenNotInteger { position: usize, token: String },
}

impl ParseError {
    /// Stable name of the error class, used in diagnostics.
    pub fn class(&self) -> &'static str {
        match self {
            ParseError::MalformedHeader => "MalformedHeader",
            ParseError::EdgeCountMismatch { .. } => "EdgeCountMismatch",
            ParseError::EndpointOutOfRange { .. } => "EndpointOutOfRange",
            ParseError::TokenNotInteger { .. } => "TokenNotInteger",
        }
    }
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub fn parse_edge_list(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut tokens = text.split_ascii_whitespace();

    let mut header = || -> Result<usize, ParseError> {
        tokens
            .next()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or(ParseError::MalformedHeader)
    };
    let vertex_count = header()?;
    let edge_count = header()?;

    let body: Vec<&str> = tokens.collect();
    if body.len() != edge_count.saturating_mul(2) {
        return Err(ParseError::EdgeCountMismatch {
            declared: edge_count,
            found: body.len(),
        });
    }

    let mut graph = DirectedGraph::new(vertex_count);
    for (edge, pair) in body.chunks_exact(2).enumerate() {
        let endpoint = |offset: usize| -> Result<usize, ParseError> {
            let token = pair[offset];
            let value: i64 = token.parse().map_err(|_| ParseError::TokenNotInteger {
                // header occupies positions 0 and 1
                position: 2 + 2 * edge + offset,
                token: token.to_owned(),
            })?;
            if value < 1 || value as u64 > vertex_count as u64 {
                return Err(ParseError::EndpointOutOfRange {
                    edge,
                    value,
                    vertex_count,
                });
            }
            Ok(value as usize - 1)
        };
        let u = endpoint(0)?;
        let v = endpoint(1)?;
        graph.add_edge(u, v).expect("endpoints range-checked");
    }
    Ok(graph)
}

pub fn read_edge_list<R: Read>(mut reader: R) -> Result<DirectedGraph, ReadError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    Ok(parse_edge_list(&text)?)
}

/// Serializes `graph` in the edge-list format, edges in [`DirectedGraph::edges`] order.
pub fn format_edge_list(graph: &DirectedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn format_partition(partition: &SccPartition) -> String {
    let mut out = String::new();
    writeln!(out, "{}", partition.component_count()).unwrap();
    for group in partition.members() {
        for &v in group {
            write!(out, "{} ", v + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write_partition<W: Write>(mut writer: W, partition: &SccPartition) -> io::Result<()> {
    writer.write_all(format_partition(partition).as_bytes())?;
    writer.flush()
}
