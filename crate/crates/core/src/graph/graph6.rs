//! graph6 encoding (McKay's format): a size header followed by the upper
//! triangle of the adjacency matrix, column by column, six bits per byte.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminator are accepted; anything else after the bit field is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    match bytes.get(pos) {
        None => return Err(err(pos, "missing size header")),
        Some(b':') => return Err(err(pos, "sparse6 input is not supported")),
        Some(b'&') => return Err(err(pos, "digraph6 input is not supported")),
        _ => {}
    }

    let take = |pos: usize| -> Result<u64> {
        match bytes.get(pos) {
            None => Err(err(pos, "truncated input")),
            Some(&b) if (BIAS..=126).contains(&b) => Ok(u64::from(b - BIAS)),
            Some(&b) => Err(err(pos, format!("byte {b:#04x} outside 63..=126"))),
        }
    };

    let n = if bytes[pos] != 126 {
        let n = take(pos)?;
        pos += 1;
        n
    } else if bytes.get(pos + 1) != Some(&126) {
        let mut n = 0;
        for i in 1..=3 {
            n = (n << 6) | take(pos + i)?;
        }
        pos += 4;
        n
    } else {
        let mut n = 0;
        for i in 2..=7 {
            n = (n << 6) | take(pos + i)?;
        }
        pos += 8;
        n
    };
    let n = usize::try_from(n).map_err(|_| err(0, "vertex count does not fit in memory"))?;

    let bits = n * n.saturating_sub(1) / 2;
    let nbytes = bits.div_ceil(6);
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let offset = pos + bit / 6;
            let value = take(offset)?;
            if value >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == bits {
                break 'outer;
            }
        }
    }
    // validates the padding byte range even when no bits were read from it
    for offset in pos..pos + nbytes {
        take(offset)?;
    }
    pos += nbytes;

    let rest = &text[pos..];
    let trimmed = rest.trim_end_matches(['\n', '\r']);
    if !trimmed.is_empty() {
        return Err(err(pos, format!("trailing garbage {trimmed:?}")));
    }
    Graph::new(n, edges)
}

/// Encodes a graph as a single graph6 line without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
