//! graph6 and plain edge-list serialization.
//!
//! The graph6 form packs the upper triangle of the adjacency matrix in
//! column order into 6-bit groups offset by 63. Orders up to 62 use a single
//! header byte `n + 63`; larger orders (up to 258047) use a `~` prefix and an
//! 18-bit header. Encoding and decoding round-trip bit-exactly: padding bits
//! must be zero and trailing bytes are rejected.

use crate::graph::{GraphError, SubcubicGraph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("empty input")]
    Empty,
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidByte(u8),
    #[error("graph6 input truncated: expected {expected} body bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body")]
    TrailingData,
    #[error("nonzero padding bits in graph6 body")]
    DirtyPadding,
    #[error("order {0} not representable in graph6")]
    OrderTooLarge(usize),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const LONG_FORM_MAX: usize = 258047;

pub fn to_graph6(g: &SubcubicGraph) -> String {
    let n = g.n();
    assert!(n <= LONG_FORM_MAX, "order {n} not representable in graph6");
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(b'~');
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        bytes.push(group + 63);
    }
    String::from_utf8(bytes).unwrap()
}

pub fn from_graph6(s: &str) -> Result<SubcubicGraph, CodecError> {
    let bytes = s.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty);
    }
    let pos;
    let n = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(CodecError::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == b'~' {
            // 36-bit orders exceed what this toolkit works with.
            return Err(CodecError::OrderTooLarge(usize::MAX));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(CodecError::InvalidByte(b));
            }
            n = n << 6 | (b - 63) as usize;
        }
        pos = 4;
        if n <= 62 {
            // Long form used for an order the short form covers: not canonical.
            return Err(CodecError::InvalidByte(b'~'));
        }
        n
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err(CodecError::InvalidByte(bytes[0]));
        }
        pos = 1;
        (bytes[0] - 63) as usize
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let body_len = bit_count.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < body_len {
        return Err(CodecError::Truncated {
            expected: body_len,
            found: body.len(),
        });
    }
    if body.len() > body_len {
        return Err(CodecError::TrailingData);
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n as u32 {
        for i in 0..j {
            if bit >= bit_count {
                break 'outer;
            }
            let b = body[bit / 6];
            if !(63..=126).contains(&b) {
                return Err(CodecError::InvalidByte(b));
            }
            if (b - 63) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if body_len > 0 {
        let last = body[body_len - 1];
        if !(63..=126).contains(&last) {
            return Err(CodecError::InvalidByte(last));
        }
        let pad = body_len * 6 - bit_count;
        if pad > 0 && (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(CodecError::DirtyPadding);
        }
    }
    Ok(SubcubicGraph::from_edges(n, &edges)?)
}

/// Plain text form: the order on the first line, one `u v` pair per line.
pub fn to_edge_list(g: &SubcubicGraph) -> String {
    let mut out = g.n().to_string();
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(s: &str) -> Result<SubcubicGraph, CodecError> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or(CodecError::Empty)?
        .parse()
        .map_err(|_| CodecError::EdgeList("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let u = it.next().and_then(|t| t.parse().ok());
        let v = it.next().and_then(|t| t.parse().ok());
        match (u, v, it.next()) {
            (Some(u), Some(v), None) => edges.push((u, v)),
            _ => return Err(CodecError::EdgeList(format!("bad edge line {line:?}"))),
        }
    }
    Ok(SubcubicGraph::from_edges(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> SubcubicGraph {
        SubcubicGraph::from_edges(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    // Expected strings were produced by an independent graph6 implementation.
    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&k23()), "DFw");
        let k33 = SubcubicGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(to_graph6(&k33), "EFz_");
        let p4 = SubcubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&p4), "Ch");
        assert_eq!(to_graph6(&SubcubicGraph::from_edges(0, &[]).unwrap()), "?");
        assert_eq!(to_graph6(&SubcubicGraph::from_edges(1, &[]).unwrap()), "@");
        assert_eq!(to_graph6(&SubcubicGraph::from_edges(2, &[(0, 1)]).unwrap()), "A_");

        let mut e: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
        e.extend((0..5).map(|i| (i, i + 5)));
        let prism5 = SubcubicGraph::from_edges(10, &e).unwrap();
        assert_eq!(to_graph6(&prism5), "IheAHCPBG");
    }

    #[test]
    fn long_form_round_trip() {
        let edges: Vec<(u32, u32)> = (0..63).map(|i| (i, (i + 1) % 63)).collect();
        let c63 = SubcubicGraph::from_edges(63, &edges).unwrap();
        let s = to_graph6(&c63);
        assert!(s.starts_with('~'));
        let back = from_graph6(&s).unwrap();
        assert_eq!(back.n(), 63);
        assert_eq!(back.edges(), c63.edges());
    }

    #[test]
    fn round_trip_exact() {
        for g in [
            k23(),
            SubcubicGraph::from_edges(1, &[]).unwrap(),
            SubcubicGraph::from_edges(7, &[(0, 6), (2, 5), (1, 3)]).unwrap(),
        ] {
            let s = to_graph6(&g);
            let back = from_graph6(&s).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges(), g.edges());
            assert_eq!(to_graph6(&back), s);
        }
    }

    #[test]
    fn decode_rejects_malformed() {
        assert_eq!(from_graph6(""), Err(CodecError::Empty));
        assert!(matches!(from_graph6("D"), Err(CodecError::Truncated { .. })));
        assert_eq!(from_graph6("DFwX"), Err(CodecError::TrailingData));
        assert!(matches!(from_graph6("\x1bFw"), Err(CodecError::InvalidByte(_))));
        // C5 with a chord pattern pushing one vertex to degree four must fail
        // the subcubic check, not silently truncate.
        let k5 = "D~{";
        assert!(matches!(
            from_graph6(k5),
            Err(CodecError::Graph(GraphError::DegreeExceedsThree { .. }))
        ));
        // Nonzero padding bits: flip the last padding bit of "DFw".
        assert_eq!(from_graph6("DFx"), Err(CodecError::DirtyPadding));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = k23();
        let text = to_edge_list(&g);
        assert!(text.starts_with("5\n"));
        let back = from_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert!(from_edge_list("").is_err());
        assert!(from_edge_list("3\n0 1 2\n").is_err());
        assert!(from_edge_list("abc\n").is_err());
    }
}
