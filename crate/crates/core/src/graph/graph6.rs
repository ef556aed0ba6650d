//! graph6 encoding (nauty/McKay format) restricted to n ≤ 64.
//!
//! Header byte `n + 63` for n ≤ 62, otherwise `~` followed by three bytes
//! holding n in 18 bits. The body packs the upper triangle column by column
//! (x01, x02, x12, x03, ...) six bits per byte, big-endian, each byte + 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(parse_err(offset, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(parse_err(offset, format!("byte 0x{b:02x} outside graph6 range"))),
    }
}

/// Decodes one graph6 line. Surrounding whitespace and a `>>graph6<<` prefix are ignored.
pub fn graph_from_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (body, base) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, lead + 10),
        None => (trimmed, lead),
    };
    let bytes = body.as_bytes();
    let at = |i: usize| base + i;

    let first = sextet(bytes, 0).map_err(|e| shift(e, base))?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(parse_err(at(1), "8-byte size header exceeds the 64-vertex limit"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))? as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 vertex count",
            requested: n,
            limit: MAX_VERTICES,
        });
    }

    let mut g = Graph::empty(n)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let mut word = 0u8;
    let mut left = 0u32;
    let mut k = 0usize;
    'cols: for v in 1..n {
        for u in 0..v {
            if left == 0 {
                word = sextet(bytes, pos).map_err(|e| shift(e, base))?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if word >> left & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
            if k == nbits {
                break 'cols;
            }
        }
    }
    if pos != bytes.len() {
        return Err(parse_err(at(pos), "trailing bytes after graph body"));
    }
    Ok(g)
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

pub fn graph_to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = (word << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + BIAS);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
