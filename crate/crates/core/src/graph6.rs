//! Bit-exact graph6 encoding and decoding (headerless variant).
//!
//! Layout: for n ≤ 62 a single length byte n+63; for n ∈ {63, 64} the
//! extended form `~` followed by three bytes carrying an 18-bit big-endian
//! value in 6-bit groups, each offset by 63. The body packs the upper
//! triangle column by column, x(0,1), x(0,2), x(1,2), x(0,3), …, into
//! 6-bit groups, most significant bit first, each group offset by 63 and
//! the last group zero-padded.
//!
//! Decoding is strict: non-canonical length fields, truncation, trailing
//! bytes and nonzero padding are all rejected with the byte offset, so
//! `decode ∘ encode` and `encode ∘ decode` are both identities on their
//! domains.

use crate::error::{Error, Graph6ErrorKind as Kind};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

/// Decodes one headerless graph6 line.
pub fn decode(text: &str) -> Result<Graph, Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::graph6(0, Kind::Empty));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::graph6(i, Kind::NonPrintable { byte: b }));
        }
    }

    let (n, body_start) = if bytes[0] == 126 {
        // Extended length: three more bytes, 6 bits each, big-endian.
        if bytes.len() < 4 {
            return Err(Error::graph6(bytes.len(), Kind::BadLength));
        }
        if bytes[1] == 126 {
            // The 8-byte form encodes n ≥ 258048, far beyond our capacity.
            return Err(Error::graph6(1, Kind::BadLength));
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        if n < 63 {
            // Canonical encodings use the short form below 63.
            return Err(Error::graph6(0, Kind::BadLength));
        }
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };

    if n > MAX_VERTICES {
        return Err(Error::graph6(0, Kind::UnsupportedOrder { n }));
    }

    let bit_count = n * (n.saturating_sub(1)) / 2;
    let needed = bit_count.div_ceil(6);
    let got = bytes.len() - body_start;
    if got < needed {
        return Err(Error::graph6(bytes.len(), Kind::Truncated { needed, got }));
    }
    if got > needed {
        return Err(Error::graph6(body_start + needed, Kind::TrailingGarbage));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[body_start + bit_index / 6] - OFFSET;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
        }
    }
    // Remaining bits of the last group must be zero padding.
    while bit_index < needed * 6 {
        let byte = bytes[body_start + bit_index / 6] - OFFSET;
        if byte >> (5 - bit_index % 6) & 1 == 1 {
            return Err(Error::graph6(
                body_start + bit_index / 6,
                Kind::NonzeroPadding,
            ));
        }
        bit_index += 1;
    }

    Ok(Graph::from_edges(n, &edges))
}

/// Encodes a graph as a headerless graph6 line.
///
/// Total on [`Graph`]: the type already caps the order at 64, which this
/// format covers via the extended length form.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }

    let mut group = 0u8;
    let mut bits_in_group = 0;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            group |= g.has_edge(row, col) as u8;
            bits_in_group += 1;
            if bits_in_group == 6 {
                out.push(group + OFFSET);
                group = 0;
                bits_in_group = 0;
            }
        }
    }
    if bits_in_group > 0 {
        group <<= 6 - bits_in_group;
        out.push(group + OFFSET);
    }

    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
