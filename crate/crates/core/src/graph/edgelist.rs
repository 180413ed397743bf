//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0-based vertex ids)
//! ```
//!
//! Lines whose first non-blank character is `#` and blank lines are skipped.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers, found `{text}`")]
    Malformed { line: usize, text: String },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCount { declared: usize, found: usize },
    #[error("header declares {0} vertices, more than the supported limit")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const MAX_VERTICES: usize = super::graph6::MAX_VERTICES;

fn parse_pair(line_no: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let malformed = || EdgeListError::Malformed {
        line: line_no,
        text: text.to_string(),
    };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
    let b = it.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
    if it.next().is_some() {
        return Err(malformed());
    }
    Ok((a, b))
}

/// Parses the header and edge lines without building a [`Graph`].
pub fn parse_edges(input: &str) -> Result<(usize, Vec<(usize, usize)>), EdgeListError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(line_no, header)?;
    if n > MAX_VERTICES {
        return Err(EdgeListError::TooLarge(n));
    }
    let mut edges = Vec::with_capacity(m.min(1024));
    for (line_no, text) in lines {
        edges.push(parse_pair(line_no, text)?);
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok((n, edges))
}

pub fn parse_edge_list(input: &str) -> Result<Graph, EdgeListError> {
    let (n, edges) = parse_edges(input)?;
    Ok(Graph::from_edge_list(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.x, e.y);
    }
    out
}
