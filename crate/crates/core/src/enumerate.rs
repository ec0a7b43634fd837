//! Isomorphism-reduced enumeration of all graphs on a given (small) vertex
//! count, by vertex augmentation with canonical-form deduplication. This is
//! oracle infrastructure: it feeds the exhaustive sweeps and generates the
//! fixture streams that stand in for an external enumerator.

use crate::canon::{canonical_key, graph_from_key, CanonKey};
use crate::graph::Graph;
use std::collections::HashMap;

/// Practical ceiling: level n costs |classes(n−1)|·2^(n−1) canonical forms,
/// which is minutes-scale already at n = 9.
pub const MAX_ENUM_VERTICES: usize = 9;

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, in canonical-key order.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_ENUM_VERTICES,
        "enumeration capped at {MAX_ENUM_VERTICES} vertices"
    );
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level: HashMap<CanonKey, Graph> = HashMap::new();
    level.insert(canonical_key(&Graph::empty(1)), Graph::empty(1));
    for m in 1..n {
        let mut next: HashMap<CanonKey, Graph> = HashMap::new();
        for g in level.values() {
            // Attach vertex m with every possible neighborhood. Every
            // (m+1)-vertex graph arises from deleting its last vertex, so
            // this reaches every class.
            let edges = g.edges();
            for mask in 0u64..1 << m {
                let mut new_edges = edges.clone();
                for u in 0..m {
                    if mask >> u & 1 == 1 {
                        new_edges.push((u, m));
                    }
                }
                let candidate = Graph::from_edges(m + 1, &new_edges);
                let key = canonical_key(&candidate);
                next.entry(key).or_insert_with(|| graph_from_key(key));
            }
        }
        level = next;
    }
    let mut pairs: Vec<(CanonKey, Graph)> = level.into_iter().collect();
    pairs.sort_by_key(|(k, _)| *k);
    pairs.into_iter().map(|(_, g)| g).collect()
}

/// Connected representatives on exactly `n` vertices.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}
