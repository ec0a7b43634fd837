//! Exact chromatic number and (weighted) maximum independent set by
//! branch and bound on bitsets. Desk-scale only: both solvers refuse
//! inputs above a documented capacity knob (default 20 vertices) that the
//! CLI surfaces as a flag.

use crate::error::Error;
use crate::graph::{iter_bits, mask_below, Graph};

/// Default vertex capacity for the exact solvers. Everything this crate
/// needs χ or α for (components of the high-vertex subgraph, Gallai trees,
/// census graphs) is far smaller.
pub const DEFAULT_EXACT_CAP: usize = 20;

/// Exact chromatic number, capacity-capped at [`DEFAULT_EXACT_CAP`].
pub fn chromatic_number(g: &Graph) -> Result<usize, Error> {
    chromatic_number_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// greedy (DSATUR) upper bound, then per-k feasibility search with
/// first-use color symmetry breaking.
pub fn chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<usize, Error> {
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "chromatic number solver",
            limit: cap,
            actual: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }

    let clique = greedy_clique(g);
    let lower = clique.count_ones() as usize;
    let upper = dsatur_bound(g);
    for k in lower..upper {
        if colorable_with(g, k, clique).is_some() {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Some proper coloring with at most `k` colors, if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    colorable_with(g, k, greedy_clique(g))
        .map(|colors| colors.into_iter().map(|c| c as usize).collect())
}

/// Exact independence number, capacity-capped at [`DEFAULT_EXACT_CAP`].
pub fn independence_number(g: &Graph) -> Result<usize, Error> {
    independence_number_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn independence_number_with_cap(g: &Graph, cap: usize) -> Result<usize, Error> {
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "independence number solver",
            limit: cap,
            actual: g.n(),
        });
    }
    Ok(max_independent_set(g).count_ones() as usize)
}

/// A maximum independent set of `g` (no capacity check; callers go through
/// [`independence_number_with_cap`] when the knob matters).
pub fn max_independent_set(g: &Graph) -> u64 {
    max_weight_independent_set(g, &vec![1; g.n()], g.full_mask()).1
}

/// Maximizes Σ w(v) over independent sets I ⊆ `allowed`.
///
/// Branch and bound on the candidate bitset; the bound is the current
/// weight plus the whole remaining candidate weight. Zero-weight vertices
/// are as good excluded, so ties resolve toward smaller sets.
pub fn max_weight_independent_set(g: &Graph, weights: &[usize], allowed: u64) -> (usize, u64) {
    debug_assert_eq!(weights.len(), g.n());
    let mut best = (0, 0u64);
    branch_mwis(g, weights, allowed, 0, 0, &mut best);
    best
}

fn branch_mwis(
    g: &Graph,
    weights: &[usize],
    candidates: u64,
    cur_weight: usize,
    cur_set: u64,
    best: &mut (usize, u64),
) {
    if cur_weight > best.0 {
        *best = (cur_weight, cur_set);
    }
    if candidates == 0 {
        return;
    }
    let remaining: usize = iter_bits(candidates).map(|v| weights[v]).sum();
    if cur_weight + remaining <= best.0 {
        return;
    }
    // Branch on the candidate with the most candidate-neighbors: including
    // it shrinks the residual problem fastest.
    let v = iter_bits(candidates)
        .max_by_key(|&v| (g.neighbors(v) & candidates).count_ones())
        .expect("candidates nonempty");
    branch_mwis(
        g,
        weights,
        candidates & !(g.neighbors(v) | 1 << v),
        cur_weight + weights[v],
        cur_set | 1 << v,
        best,
    );
    // Excluding v is pointless when nothing conflicts with it.
    if g.neighbors(v) & candidates != 0 {
        branch_mwis(
            g,
            weights,
            candidates & !(1 << v),
            cur_weight,
            cur_set,
            best,
        );
    }
}

/// Greedily grows a clique from a maximum-degree vertex.
fn greedy_clique(g: &Graph) -> u64 {
    if g.n() == 0 {
        return 0;
    }
    let start = (0..g.n()).max_by_key(|&v| g.degree(v)).unwrap();
    let mut clique = 1u64 << start;
    let mut common = g.neighbors(start);
    while common != 0 {
        let v = iter_bits(common)
            .max_by_key(|&v| (g.neighbors(v) & common).count_ones())
            .unwrap();
        clique |= 1 << v;
        common &= g.neighbors(v);
    }
    clique
}

/// DSATUR greedy coloring; returns the number of colors used.
fn dsatur_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut neighbor_colors = vec![0u64; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (neighbor_colors[v].count_ones(), g.degree(v)))
            .unwrap();
        let c = (!neighbor_colors[v]).trailing_zeros() as usize;
        color[v] = c;
        used = used.max(c + 1);
        for u in iter_bits(g.neighbors(v)) {
            neighbor_colors[u] |= 1 << c;
        }
    }
    used
}

/// Searches for a proper coloring with at most `k` colors.
///
/// Symmetry breaking: the seed clique is pre-colored 0,1,2,…, and a branch
/// may open at most one color that is new at that point, so each color
/// class pattern is tried once.
fn colorable_with(g: &Graph, k: usize, clique: u64) -> Option<Vec<u8>> {
    if clique.count_ones() as usize > k {
        return None;
    }
    let mut colors = vec![u8::MAX; g.n()];
    let mut used = 0usize;
    for v in iter_bits(clique) {
        colors[v] = used as u8;
        used += 1;
    }
    if extend_coloring(g, k, &mut colors, used) {
        Some(colors)
    } else {
        None
    }
}

fn extend_coloring(g: &Graph, k: usize, colors: &mut Vec<u8>, used: usize) -> bool {
    // Most-constrained vertex first.
    let mut pick: Option<(usize, u64)> = None;
    for v in 0..g.n() {
        if colors[v] != u8::MAX {
            continue;
        }
        let mut forbidden = 0u64;
        for u in iter_bits(g.neighbors(v)) {
            if colors[u] != u8::MAX {
                forbidden |= 1 << colors[u];
            }
        }
        let avail = mask_below(used.min(k - 1) + 1).min(mask_below(k)) & !forbidden;
        match pick {
            Some((_, best_avail)) if best_avail.count_ones() <= avail.count_ones() => {}
            _ => pick = Some((v, avail)),
        }
    }
    let Some((v, avail)) = pick else {
        return true; // everything colored
    };
    for c in iter_bits(avail) {
        colors[v] = c as u8;
        let next_used = used.max(c + 1);
        if extend_coloring(g, k, colors, next_used) {
            return true;
        }
    }
    colors[v] = u8::MAX;
    false
}
