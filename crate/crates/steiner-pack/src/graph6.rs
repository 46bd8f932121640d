//! graph6 text format, short form only (`n <= 62`).
//!
//! A graph is one header byte `n + 63` followed by the upper triangle of
//! the adjacency matrix in column-major order (`(0,1), (0,2), (1,2), (0,3),
//! ...`), packed six bits per byte, most significant first, each byte offset
//! by 63 and the last one zero-padded.

use steiner_pack_core::Graph;
use thiserror::Error;

/// Largest order the short form can encode.
pub const GRAPH6_CAP: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 header {0:?} is not a short-form order")]
    Header(char),
    #[error("order {0} is outside 1..=62")]
    Order(usize),
    #[error("byte {0:?} is outside the graph6 range")]
    Byte(char),
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    Padding,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 string (surrounding whitespace ignored).
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == b'~' || !(63..=126).contains(&head) {
        return Err(Graph6Error::Header(head as char));
    }
    let n = (head - 63) as usize;
    if n == 0 || n > GRAPH6_CAP {
        return Err(Graph6Error::Order(n));
    }
    if data.len() != data_len(n) {
        return Err(Graph6Error::Length { expected: data_len(n), found: data.len() });
    }
    let mut bits = Vec::with_capacity(data.len() * 6);
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::Byte(b as char));
        }
        let x = b - 63;
        bits.extend((0..6).rev().map(|i| x >> i & 1 == 1));
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    if bits[i..].iter().any(|&b| b) {
        return Err(Graph6Error::Padding);
    }
    Ok(Graph::from_edges(n, edges).unwrap_or_else(|_| unreachable!("edges are in range")))
}

/// Encodes `g`; fails for orders above [`GRAPH6_CAP`].
pub fn write(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n == 0 || n > GRAPH6_CAP {
        return Err(Graph6Error::Order(n));
    }
    let mut out = String::with_capacity(1 + data_len(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses a stream with one graph per line; blank lines and a leading
/// `>>graph6<<` marker are skipped.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i, line.trim().strip_prefix(">>graph6<<").unwrap_or(line.trim())))
        .filter(|(_, line)| !line.is_empty())
        .map(|(i, line)| parse(line).map_err(|e| (i + 1, e)))
        .collect()
}
