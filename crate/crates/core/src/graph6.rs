//! graph6 codec for graphs with at most 62 vertices.
//!
//! Layout: one header byte `n + 63`, then the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian six bits per
//! byte, each byte offset by 63. The last group is zero-filled.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

/// Largest order the short graph6 header can express.
pub const GRAPH6_MAX_ORDER: usize = 62;

const BIAS: u8 = 63;

fn decode_err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge { n, limit: GRAPH6_MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + BIAS);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let header = *bytes.first().ok_or(decode_err(0, "empty input"))?;
    if header == 126 {
        return Err(decode_err(0, "extended header (n > 62) is not supported"));
    }
    if !(BIAS..126).contains(&header) {
        return Err(decode_err(0, "header byte out of range"));
    }
    let n = (header - BIAS) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let body_len = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < body_len {
        return Err(decode_err(bytes.len(), "input ends before the adjacency data"));
    }
    if body.len() > body_len {
        return Err(decode_err(1 + body_len, "trailing bytes after the adjacency data"));
    }
    for (k, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(decode_err(1 + k, "byte out of range 63..=126"));
        }
    }
    if nbits % 6 != 0 {
        let last = body[body_len - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(decode_err(body_len, "nonzero padding bits"));
        }
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
