//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// graph6 parsing failed; `offset` is the byte position in the line.
    #[error("graph6 parse error at byte {offset}: {kind}")]
    Graph6 {
        offset: usize,
        kind: Graph6ErrorKind,
    },

    /// An input exceeds the documented size knob of an exact solver.
    #[error("{what}: input size {actual} exceeds capacity {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A caller violated an operation's contract (e.g. disconnected input
    /// to a block decomposition, a list referencing a color outside the
    /// universe).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A checker's stated hypothesis does not hold for the input. Kept
    /// distinct from `Contract` so callers can tell "you misused the API"
    /// from "this input is outside the theorem's hypothesis".
    #[error("precondition not met: {0}")]
    Precondition(String),
}

/// Specific graph6 malformations, with enough detail to name the byte.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} outside the printable graph6 range 63..=126")]
    NonPrintable { byte: u8 },
    #[error("malformed or non-canonical length field")]
    BadLength,
    #[error("graph order {n} exceeds the supported maximum of 64")]
    UnsupportedOrder { n: usize },
    #[error("input ends before the edge bits: need {needed} body bytes, got {got}")]
    Truncated { needed: usize, got: usize },
    #[error("trailing bytes after the edge bits")]
    TrailingGarbage,
    #[error("nonzero padding bits in the final group")]
    NonzeroPadding,
}

impl Error {
    pub(crate) fn graph6(offset: usize, kind: Graph6ErrorKind) -> Self {
        Error::Graph6 { offset, kind }
    }
}
