//! graph6 encoding for graphs on at most 16 vertices (single-byte header only).

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid header byte {0:#04x}")]
    BadHeader(u8),
    #[error("graph6 header encodes {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated bit stream: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes: expected {expected} data bytes, found {found}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("nonzero padding bits in the final byte")]
    NonzeroPadding,
}

const OFFSET: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub(crate) fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + OFFSET);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub(crate) fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&header, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(OFFSET..=126).contains(&header) {
        return Err(Graph6Error::BadHeader(header));
    }
    if header == 126 {
        // Multi-byte headers only occur for n >= 63.
        return Err(Graph6Error::TooManyVertices(63));
    }
    let n = usize::from(header - OFFSET);
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected,
            found: data.len(),
        });
    }
    for (k, &b) in data.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: k + 1, byte: b });
        }
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - OFFSET;
            if byte & (0b10_0000 >> (bit % 6)) != 0 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - bit % 6)) - 1;
        if (data[expected - 1] - OFFSET) & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}
