//! graph6 encoding for graphs with fewer than 63 vertices.
//!
//! Header byte `n + 63`, then the upper triangle in column-major order
//! (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte, most
//! significant bit first, each byte offset by 63. Padding bits must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the single-byte header.
pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            limit: MAX_GRAPH6_ORDER,
        });
    }
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };

    let &header = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&header) {
        return Err(err(0, "header byte out of range"));
    }
    if header == 126 {
        return Err(err(0, "long-form header (n >= 63) is not supported"));
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }
    let nbits = n * (n - 1) / 2;
    let body = &bytes[1..];
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            1 + body.len().min(expected),
            &format!("expected {expected} body bytes, found {}", body.len()),
        ));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i + 1, "body byte out of range 63..=126"));
        }
    }

    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if bit(pad) {
            return Err(err(1 + pad / 6, "non-zero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn known_strings() {
        // A-C, A-E, B-D, D-E on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(emit_graph6(&complete(1).unwrap()).unwrap(), "@");
        assert_eq!(emit_graph6(&complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(emit_graph6(&complete(4).unwrap()).unwrap(), "C~");
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=20 {
            let p = path(n).unwrap();
            assert_eq!(parse_graph6(&emit_graph6(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("D"), Err(Error::Graph6 { offset: 1, .. })));
        // body byte below 63
        assert!(matches!(parse_graph6("DQ!"), Err(Error::Graph6 { offset: 2, .. })));
        // "A" + one body byte: 1 edge bit, five padding bits set
        assert!(matches!(parse_graph6("A~"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(parse_graph6("DQcc").is_err());
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn accepts_header_prefix_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
    }
}
