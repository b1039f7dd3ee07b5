//! graph6 encoding, short header only (at most 62 vertices).
//!
//! The header byte is `n + 63`. The upper triangle of the adjacency matrix is
//! read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte with the most significant bit first, zero padded, and offset by 63.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

/// Optional header line written by nauty tools.
pub const FILE_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("long-form header at offset {offset} (more than {MAX_ORDER} vertices) is not supported")]
    LongHeader { offset: usize },
    #[error("payload truncated at offset {offset}: expected {expected} bytes after the header")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph with {0} vertices exceeds the short-header limit of {MAX_ORDER}")]
    Unsupported(usize),
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let start = if text.starts_with(FILE_HEADER.as_bytes()) { FILE_HEADER.len() } else { 0 };
    let text = &text[start..];
    let at = |i: usize| start + i;

    let &header = text.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::InvalidByte { offset: at(0), byte: header });
    }
    if header == 126 {
        return Err(Graph6Error::LongHeader { offset: at(0) });
    }
    let n = (header - 63) as usize;
    let expected = payload_len(n);
    let payload = &text[1..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { offset: at(text.len()), expected });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData { offset: at(1 + expected) });
    }

    for (i, &byte) in payload.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset: at(1 + i), byte });
        }
    }
    let bit = |k: usize| (payload[k / 6] - 63) & (0x20 >> (k % 6)) != 0;

    let mut masks = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding { offset: at(expected) });
    }
    Ok(Graph::from_masks(masks))
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::Unsupported(n));
    }
    let masks = g.masks().expect("short-header graphs are dense");
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(masks[j] & (1 << i) != 0);
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straightforward encoder working on a string of '0'/'1' characters.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bitstring = String::new();
        for j in 1..n {
            for i in 0..j {
                let on = edges.contains(&(i, j)) || edges.contains(&(j, i));
                bitstring.push(if on { '1' } else { '0' });
            }
        }
        while !bitstring.len().is_multiple_of(6) {
            bitstring.push('0');
        }
        let mut out = String::new();
        out.push(char::from(n as u8 + 63));
        for c in bitstring.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(c).unwrap(), 2).unwrap();
            out.push(char::from(v + 63));
        }
        out
    }

    #[test]
    fn reference_oracle_values() {
        assert_eq!(reference_encode(4, &[(0, 1), (1, 2), (2, 3)]), "Ch");
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
        assert_eq!(reference_encode(4, &[]), "C?");
    }

    #[test]
    fn parse_examples() {
        let e4 = parse_graph6(b"C?").unwrap();
        assert_eq!((e4.order(), e4.size()), (4, 0));
        assert_eq!(parse_graph6(b"C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6(b"Ch").unwrap(), Graph::path(4));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::empty(4)).unwrap(), "C?");
        assert_eq!(to_graph6(&Graph::path(4)).unwrap(), "Ch");
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn encoder_matches_reference_on_assorted_graphs() {
        for n in 0..12 {
            for g in [Graph::path(n), Graph::cycle(n), Graph::complete(n)] {
                let edges: Vec<_> = g.edges().collect();
                assert_eq!(to_graph6(&g).unwrap(), reference_encode(n, &edges));
            }
        }
    }

    #[test]
    fn header_passthrough() {
        assert_eq!(parse_graph6(b">>graph6<<Ch").unwrap(), Graph::path(4));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(b"~?"), Err(Graph6Error::LongHeader { offset: 0 }));
        assert_eq!(parse_graph6(b"D?"), Err(Graph6Error::Truncated { offset: 2, expected: 2 }));
        assert_eq!(parse_graph6(b"Ch?"), Err(Graph6Error::TrailingData { offset: 2 }));
        assert_eq!(parse_graph6(b"C "), Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' }));
        assert_eq!(parse_graph6(b" "), Err(Graph6Error::InvalidByte { offset: 0, byte: b' ' }));
        // K2 uses one payload bit; the remaining five must be zero.
        assert_eq!(parse_graph6(b"A`"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
    }

    #[test]
    fn oversized_graph_rejected() {
        assert_eq!(to_graph6(&Graph::empty(63)), Err(Graph6Error::Unsupported(63)));
        assert!(to_graph6(&Graph::empty(62)).is_ok());
    }
}
