//! Simple undirected graphs on at most 64 vertices, one adjacency bitset
//! per vertex. Vertex labels are `0..n`. All search kernels in this crate
//! live on these single-word neighborhoods.

use crate::ratio::Exact;
use num_rational::Rational64;
use serde::Serialize;

/// Maximum supported vertex count (one `u64` word per neighborhood).
pub const MAX_VERTICES: usize = 64;

/// Immutable simple undirected graph with bitset adjacency.
///
/// Invariants, enforced at construction: adjacency is symmetric, there are
/// no self-loops, all bits lie below `n`, and the cached edge count equals
/// half the sum of the bitset popcounts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![0; n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Panics on self-loops or labels ≥ n;
    /// duplicate edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v);
        }
        g
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        if !self.has_edge(u, v) {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.edge_count += 1;
        }
    }

    /// Number of vertices |G|.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges ||G||.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Bitset of all vertices.
    pub fn full_mask(&self) -> u64 {
        mask_below(self.n)
    }

    /// Edges as (u, v) pairs with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for v in 1..self.n {
            for u in iter_bits(self.adj[v] & mask_below(v)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Copy of the graph with one edge removed. Panics if absent.
    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v), "edge ({u},{v}) not present");
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g.edge_count -= 1;
        g
    }

    /// Induced subgraph on the vertices of `mask`, relabeled to 0..k in
    /// increasing label order, plus the map new→old.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        debug_assert_eq!(mask & !self.full_mask(), 0);
        let map: Vec<usize> = iter_bits(mask).collect();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Number of edges of G inside `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        iter_bits(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Number of edges with one end in `a` and the other in `b`
    /// (callers pass disjoint masks).
    pub fn edges_between(&self, a: u64, b: u64) -> usize {
        debug_assert_eq!(a & b, 0);
        iter_bits(a)
            .map(|v| (self.adj[v] & b).count_ones() as usize)
            .sum()
    }

    /// Vertices of the component containing `start`, restricted to `within`.
    pub fn component_mask(&self, start: usize, within: u64) -> u64 {
        debug_assert!(within >> start & 1 == 1);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_bits(frontier) {
                next |= self.adj[v] & within & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected component masks of the subgraph induced on `within`,
    /// ordered by smallest vertex.
    pub fn component_masks_within(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = within;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.component_mask(v, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Connected components as induced subgraphs plus their embedding maps.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        self.component_masks_within(self.full_mask())
            .into_iter()
            .map(|m| self.induced(m))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask(0, self.full_mask()) == self.full_mask()
    }

    /// True iff the graph is K_n.
    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    // Named graphs used throughout tests and docs.

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.insert_edge(n - 1, 0);
        g
    }

    /// Star K_{1,k}: center 0, leaves 1..=k.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::empty(k + 1);
        for v in 1..=k {
            g.insert_edge(0, v);
        }
        g
    }

    /// Wheel: cycle on `rim` vertices 0..rim plus a dominating hub `rim`.
    pub fn wheel(rim: usize) -> Self {
        let mut g = Graph::cycle(rim);
        g.n += 1;
        g.adj.push(0);
        for v in 0..rim {
            g.insert_edge(v, rim);
        }
        g
    }

    /// Two triangles sharing the vertex 2.
    pub fn bowtie() -> Self {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    }

    /// The Petersen graph: outer C5 0..5, inner pentagram 5..10, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges)
    }
}

/// Per-vertex degrees plus the low/high split at a given `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Exact 2||G||/|G| (0 for the empty graph).
    pub average_degree: Exact,
    /// Vertices of degree exactly k−1.
    pub low_set: u64,
    /// All other vertices.
    pub high_set: u64,
}

/// Degree statistics of `g`, with the low set taken at degree k−1.
pub fn degree_profile(g: &Graph, k: usize) -> DegreeProfile {
    assert!(k >= 1, "degree profile needs k >= 1");
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut low = 0u64;
    for (v, &d) in degrees.iter().enumerate() {
        if d == k - 1 {
            low |= 1 << v;
        }
    }
    let average = if g.n() == 0 {
        Rational64::from_integer(0)
    } else {
        Rational64::new(2 * g.edge_count() as i64, g.n() as i64)
    };
    DegreeProfile {
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        average_degree: Exact(average),
        low_set: low,
        high_set: g.full_mask() & !low,
        degrees,
    }
}

/// Bits 0..n set.
pub fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
pub fn iter_bits(mask: u64) -> BitIter {
    BitIter(mask)
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}
