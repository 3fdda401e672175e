//! graph6 encoding and decoding.
//!
//! Follows the de-facto standard byte format: a header carrying the order
//! (printable bytes offset by 63), then the upper triangle packed
//! column-by-column into 6-bit groups, big-endian within each group.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orders above this need the 8-byte header form, which is out of budget here.
const MAX_ORDER: usize = 258_047;

/// Encodes a graph as a printable ASCII string.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph too large for the supported graph6 forms");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

/// Decodes a single graph6 value. Trailing ASCII whitespace is ignored.
pub fn graph6_decode(s: &str) -> Result<Graph> {
    let bytes: &[u8] = s.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("8-byte order form is not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Error::Graph6("graphs of order zero are not supported".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} exceeds the supported range")));
    }
    let pairs = n * (n - 1) / 2;
    let expect = pairs.div_ceil(6);
    if body.len() != expect {
        return Err(Error::Graph6(format!(
            "edge data has {} bytes, expected {expect} for order {n}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for &b in body {
        let group = b - 63;
        for bit in (0..6).rev() {
            if idx >= pairs {
                if group >> bit & 1 == 1 {
                    return Err(Error::Graph6("nonzero padding bits".into()));
                }
                continue;
            }
            if group >> bit & 1 == 1 {
                let (u, v) = pair_from_index(idx);
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major upper-triangle enumeration:
/// index 0 ↦ (0,1), 1 ↦ (0,2), 2 ↦ (1,2), 3 ↦ (0,3), ...
fn pair_from_index(idx: usize) -> (usize, usize) {
    // v is the largest integer with v(v-1)/2 <= idx
    let mut v = ((8 * idx + 1) as f64).sqrt() as usize;
    v = (v + 1).div_ceil(2);
    while v * (v - 1) / 2 > idx {
        v -= 1;
    }
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    (idx - v * (v - 1) / 2, v)
}
