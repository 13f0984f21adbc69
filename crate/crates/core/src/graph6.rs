//! graph6 codec.
//!
//! The textual graph6 format packs the upper triangle of the adjacency
//! matrix, read column by column ((0,1), (0,2), (1,2), (0,3), ...), into
//! 6-bit groups, each stored as one printable byte in 63..=126. The vertex
//! count is a single byte n+63 for n <= 62, or a 126 marker followed by
//! three 6-bit digits for n up to 258047. An optional `>>graph6<<` header
//! is accepted on input and never emitted.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
pub const GRAPH6_MAX_N: usize = 258_047;

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    let b = *bytes.get(offset).ok_or_else(|| bad(offset, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(bad(offset, format!("byte {b} outside graph6 range 63..=126")));
    }
    Ok((b - 63) as u64)
}

/// Decodes one graph6 line into a [`Graph`]. Error offsets are byte
/// positions in the input as given (header included, if present).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let mut pos = 0;
    if bytes.starts_with(HEADER) {
        pos = HEADER.len();
    }
    if pos >= bytes.len() {
        return Err(bad(pos, "missing vertex count"));
    }
    let n: usize = if bytes[pos] == 126 {
        if bytes.get(pos + 1) == Some(&126) {
            return Err(Error::TooLarge {
                n: GRAPH6_MAX_N + 1,
                limit: GRAPH6_MAX_N,
                what: "graph6 vertex count",
            });
        }
        let hi = sextet(bytes, pos + 1)?;
        let mid = sextet(bytes, pos + 2)?;
        let lo = sextet(bytes, pos + 3)?;
        pos += 4;
        (hi << 12 | mid << 6 | lo) as usize
    } else {
        let v = sextet(bytes, pos)?;
        pos += 1;
        v as usize
    };
    let nbits = n.saturating_sub(1) * n / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(bad(bytes.len(), format!("truncated: expected {nbytes} adjacency bytes")));
    }
    if bytes.len() > pos + nbytes {
        return Err(bad(pos + nbytes, "trailing data after adjacency bits"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut cur = 0u64;
    for v in 1..n {
        for u in 0..v {
            if bit % 6 == 0 {
                cur = sextet(bytes, pos + bit / 6)?;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let last = sextet(bytes, pos + nbytes - 1)?;
        let pad = 6 - bit % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad(pos + nbytes - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::TooLarge { n, limit: GRAPH6_MAX_N, what: "graph6 vertex count" });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 0x3f) as u8 + 63);
        out.push((n >> 6 & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
