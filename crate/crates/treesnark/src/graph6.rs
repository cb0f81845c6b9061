//! The graph6 interchange format: 6-bit upper-triangle encoding, offset 63.
//!
//! The size header is one character for n <= 62, `~` plus three characters
//! for n <= 258047, and `~~` plus six characters up to the format's maximum
//! of 68719476735 vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const MAX_N: u64 = 68_719_476_735;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n() as u64;
    if n > MAX_N {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = String::new();
    if n <= 62 {
        out.push(char63(n as u32));
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(char63(((n >> shift) & 0x3f) as u32));
        }
    } else {
        out.push('~');
        out.push('~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(char63(((n >> shift) & 0x3f) as u32));
        }
    }
    // upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u32;
    let mut nbits = 0;
    for j in 1..g.n() {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(VertexId::from(i), VertexId::from(j)) {
                acc |= 1;
            }
            nbits += 1;
            if nbits == 6 {
                out.push(char63(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push(char63(acc));
    }
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let malformed = |msg: &str| Error::Graph6Malformed(msg.to_string());
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(malformed(&format!("byte {b} out of printable range")));
        }
    }
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    let (n, body) = if bytes[0] != b'~' {
        (u64::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(malformed("truncated size header"));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = (n << 6) | u64::from(b - 63);
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(malformed("truncated size header"));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = (n << 6) | u64::from(b - 63);
        }
        (n, &bytes[8..])
    };
    if n > MAX_N {
        return Err(Error::Graph6TooLarge(n));
    }
    let n = usize::try_from(n).map_err(|_| Error::Graph6TooLarge(MAX_N))?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(&format!(
            "body has {} characters, expected {expected}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(VertexId::from(i), VertexId::from(j))?;
            }
            bit += 1;
            if bit == nbits {
                break 'cols;
            }
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = body[nbits / 6] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

fn char63(v: u32) -> char {
    char::from_u32(v + 63).expect("6-bit value")
}
