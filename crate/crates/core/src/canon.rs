//! Canonical forms for graphs on at most 16 vertices, used to deduplicate
//! enumeration streams up to isomorphism.
//!
//! Individualization–refinement without automorphism bookkeeping: refine an
//! ordered partition to equitability (cells split and ordered by an
//! isomorphism-invariant signature), then branch on the vertices of the
//! first non-singleton cell and take the minimum adjacency encoding over
//! all branches. Twins (vertices with equal neighborhoods outside the
//! pair) generate identical subtrees and are branched only once. Built for
//! n ≤ 12-ish inputs; adequate well past that for the sparse block trees
//! this crate enumerates.

use crate::graph::{iter_bits, Graph};

/// Order plus the upper-triangle bits of the canonically relabeled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    pub n: u8,
    pub bits: u128,
}

pub const MAX_CANON_VERTICES: usize = 16;

/// Canonical key of `g`: equal keys ⟺ isomorphic graphs.
pub fn canonical_key(g: &Graph) -> CanonKey {
    assert!(
        g.n() <= MAX_CANON_VERTICES,
        "canonical form supports at most {MAX_CANON_VERTICES} vertices"
    );
    if g.n() == 0 {
        return CanonKey { n: 0, bits: 0 };
    }
    let mut cells = vec![g.full_mask()];
    refine(g, &mut cells);
    let mut best: Option<u128> = None;
    descend(g, &cells, &mut best);
    CanonKey {
        n: g.n() as u8,
        bits: best.expect("at least one leaf"),
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

/// Rebuilds the concrete graph a key encodes: the canonically labeled
/// representative of its isomorphism class.
pub fn graph_from_key(key: CanonKey) -> Graph {
    let n = key.n as usize;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if key.bits >> idx & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// The canonically labeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_key(canonical_key(g))
}

/// Splits cells by the multiset of neighbor counts into every cell until
/// stable. Cells are reordered globally by their signature, which depends
/// only on the isomorphism type, never on labels.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let signature = |v: usize| -> Vec<u32> {
            cells
                .iter()
                .map(|&c| (g.neighbors(v) & c).count_ones())
                .collect()
        };
        let mut next: Vec<(usize, Vec<u32>, u64)> = Vec::new();
        for (ci, &cell) in cells.iter().enumerate() {
            let mut groups: Vec<(Vec<u32>, u64)> = Vec::new();
            for v in iter_bits(cell) {
                let sig = signature(v);
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, mask)) => *mask |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            groups.sort();
            for (sig, mask) in groups {
                next.push((ci, sig, mask));
            }
        }
        let refined: Vec<u64> = next.iter().map(|(_, _, m)| *m).collect();
        let stable = refined.len() == cells.len();
        *cells = refined;
        if stable {
            return;
        }
    }
}

fn descend(g: &Graph, cells: &[u64], best: &mut Option<u128>) {
    match cells.iter().position(|c| c.count_ones() > 1) {
        None => {
            let code = encode(g, cells);
            if best.is_none_or(|b| code < b) {
                *best = Some(code);
            }
        }
        Some(i) => {
            let cell = cells[i];
            let mut tried: Vec<usize> = Vec::new();
            for v in iter_bits(cell) {
                if tried.iter().any(|&u| twins(g, u, v)) {
                    continue;
                }
                tried.push(v);
                let mut child: Vec<u64> = Vec::with_capacity(cells.len() + 1);
                child.extend_from_slice(&cells[..i]);
                child.push(1 << v);
                child.push(cell & !(1 << v));
                child.extend_from_slice(&cells[i + 1..]);
                refine(g, &mut child);
                descend(g, &child, best);
            }
        }
    }
}

/// Same neighborhoods outside the pair: the transposition is an
/// automorphism, so the branches coincide.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let pair = 1u64 << u | 1 << v;
    g.neighbors(u) & !pair == g.neighbors(v) & !pair
}

/// Upper-triangle adjacency bits of the relabeled graph, positions given
/// by the discrete ordered partition.
fn encode(g: &Graph, cells: &[u64]) -> u128 {
    let mut order = [0usize; MAX_CANON_VERTICES];
    for (pos, cell) in cells.iter().enumerate() {
        order[pos] = cell.trailing_zeros() as usize;
    }
    let n = g.n();
    let mut bits = 0u128;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits |= 1 << idx;
            }
            idx += 1;
        }
    }
    bits
}
