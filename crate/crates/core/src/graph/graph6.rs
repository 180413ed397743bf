//! graph6 encoding (the 6-bit printable format used by nauty/geng).
//!
//! The vertex count is written as `N(n)`: one byte `n + 63` for `n ≤ 62`,
//! `126` followed by three 6-bit groups for `n ≤ 258047`, and `126 126`
//! followed by six groups beyond that. The upper triangle of the adjacency
//! matrix follows column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six
//! bits per byte, zero padded, each byte offset by 63.

use thiserror::Error;

use super::{Graph, GraphError};

pub const HEADER: &str = ">>graph6<<";

/// Inputs declaring more vertices than this are refused before any allocation;
/// the distance table is quadratic in the vertex count.
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated vertex count")]
    TruncatedHeader,
    #[error("graph6 declares {0} vertices, more than the supported {MAX_VERTICES}")]
    TooLarge(u64),
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits in the last adjacency byte")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes one graph6 record into its vertex count and edge list (`u < v`),
/// without requiring connectivity. Leading header and surrounding whitespace
/// are ignored.
pub fn decode_edges(input: &[u8]) -> Result<(usize, Vec<(usize, usize)>), Graph6Error> {
    let mut data = input.trim_ascii();
    if let Some(rest) = data.strip_prefix(HEADER.as_bytes()) {
        data = rest;
    }
    if data.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset,
            byte: data[offset],
        });
    }
    let (n, body) = decode_count(data)?;
    let n_usize = n as usize;
    let bits = n_usize * n_usize.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && ((body[expected - 1] - 63) & ((1u8 << pad) - 1)) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n_usize {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n_usize, edges))
}

fn decode_count(data: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    let groups = |bytes: &[u8]| bytes.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
    let (n, rest) = if data[0] != 126 {
        (u64::from(data[0] - 63), &data[1..])
    } else if data.len() >= 2 && data[1] != 126 {
        if data.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        (groups(&data[1..4]), &data[4..])
    } else {
        if data.len() < 8 {
            return Err(Graph6Error::TruncatedHeader);
        }
        (groups(&data[2..8]), &data[8..])
    };
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    Ok((n, rest))
}

/// Decodes a graph6 record into a [`Graph`], which must be connected.
pub fn from_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let (n, edges) = decode_edges(input.as_bytes())?;
    Ok(Graph::from_edge_list(n, edges)?)
}

/// Encodes `n` vertices and an edge set; edges may be given in either
/// orientation.
pub fn encode_edges<I>(n: usize, edges: I) -> String
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let bits = n * n.saturating_sub(1) / 2;
    let mut matrix = vec![false; bits];
    for (u, v) in edges {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        matrix[j * (j - 1) / 2 + i] = true;
    }
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    encode_count(n as u64, &mut out);
    for chunk in matrix.chunks(6) {
        let mut byte = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                byte |= 0x20 >> k;
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn encode_count(n: u64, out: &mut Vec<u8>) {
    let push_groups = |out: &mut Vec<u8>, count: u32| {
        for k in (0..count).rev() {
            out.push(((n >> (6 * k)) & 0x3f) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_groups(out, 3);
    } else {
        out.push(126);
        out.push(126);
        push_groups(out, 6);
    }
}

pub fn to_graph6(g: &Graph) -> String {
    encode_edges(g.n(), g.edges().map(|e| (e.x, e.y)))
}
