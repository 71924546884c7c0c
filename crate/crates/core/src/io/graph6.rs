//! graph6, restricted to the single size byte form (`n ≤ 62`).
//!
//! After the size byte `n + 63`, the upper triangle is read column by
//! column (`(0,1), (0,2), (1,2), (0,3), …`), packed six bits per character
//! with the first pair in the high bit, each group offset by 63. Trailing
//! pad bits must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(err(format!("order {n} exceeds {MAX_GRAPH6_ORDER}")));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + OFFSET);
    let (mut group, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                (group, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let (&size, body) = bytes.split_first().ok_or_else(|| err("empty string"))?;
    if let Some(&b) = bytes.iter().find(|b| !(OFFSET..=126).contains(*b)) {
        return Err(err(format!("byte {b:#04x} is outside the printable range 63..=126")));
    }
    if size == 126 {
        return Err(err(format!("multi-byte sizes (order > {MAX_GRAPH6_ORDER}) are not supported")));
    }
    let n = (size - OFFSET) as usize;
    if body.len() != body_len(n) {
        return Err(err(format!(
            "order {n} needs {} data characters, found {}",
            body_len(n),
            body.len()
        )));
    }
    let bit = |k: usize| ((body[k / 6] - OFFSET) >> (5 - k % 6)) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.put(i, j, true);
            }
            k += 1;
        }
    }
    if (k..body.len() * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
    Ok(g)
}
