//! Deliberately naive reference implementations, kept free of the pruning
//! and symmetry arguments used by the fast paths. The test suites (and the
//! acceptance gate) compare the two; nothing in the main code paths may
//! call into this module.

use crate::choosability::{canonical_assignments, is_colorable_with_lists, ListSizes};
use crate::graph::{iter_bits, mask_below, Graph};
use std::collections::HashMap;

/// χ by trying 1, 2, … colors with plain fixed-order backtracking.
pub fn chromatic_by_enumeration(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n())
        .find(|&k| colorable_plain(g, k, &mut vec![usize::MAX; g.n()], 0))
        .expect("n colors always suffice")
}

fn colorable_plain(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for c in 0..k {
        let clash = iter_bits(g.neighbors(v) & mask_below(v)).any(|u| colors[u] == c);
        if !clash {
            colors[v] = c;
            if colorable_plain(g, k, colors, v + 1) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// α over all 2^n subsets.
pub fn independence_by_subsets(g: &Graph) -> usize {
    assert!(g.n() <= 20);
    (0u64..1 << g.n())
        .filter(|&s| is_independent(g, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn is_independent(g: &Graph, set: u64) -> bool {
    iter_bits(set).all(|v| g.neighbors(v) & set == 0)
}

/// Maximum independent cover over all 2^n subsets: the crossing-edge count
/// of an independent set is the sum of its degrees.
pub fn mic_by_subsets(g: &Graph) -> usize {
    restricted_m_by_subsets(g, g.full_mask())
}

pub fn restricted_m_by_subsets(g: &Graph, h_mask: u64) -> usize {
    assert!(g.n() <= 20);
    let mut best = 0;
    let mut sub = h_mask;
    loop {
        if is_independent(g, sub) {
            let weight: usize = iter_bits(sub).map(|v| g.degree(v)).sum();
            best = best.max(weight);
        }
        if sub == 0 {
            return best;
        }
        sub = (sub - 1) & h_mask;
    }
}

/// Block vertex sets of a connected graph as the inclusion-maximal subsets
/// inducing an edge or a 2-connected subgraph, by sheer subset sweep.
pub fn blocks_by_subsets(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 16 && g.is_connected());
    if g.n() == 1 {
        return vec![1];
    }
    let mut candidates = Vec::new();
    for s in 1u64..1 << g.n() {
        let ones = s.count_ones();
        let qualifies = if ones == 2 {
            let mut it = iter_bits(s);
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            g.has_edge(u, v)
        } else if ones >= 3 {
            is_two_connected_induced(g, s)
        } else {
            false
        };
        if qualifies {
            candidates.push(s);
        }
    }
    candidates
        .iter()
        .copied()
        .filter(|&s| !candidates.iter().any(|&t| t != s && t & s == s))
        .collect()
}

fn is_two_connected_induced(g: &Graph, s: u64) -> bool {
    if !connected_within(g, s) {
        return false;
    }
    iter_bits(s).all(|v| connected_within(g, s & !(1 << v)))
}

fn connected_within(g: &Graph, s: u64) -> bool {
    match iter_bits(s).next() {
        None => true,
        Some(v) => g.component_mask(v, s) == s,
    }
}

/// List colorability by enumerating the full product of list choices.
pub fn colorable_by_product(g: &Graph, lists: &[u64]) -> bool {
    let product: usize = lists.iter().map(|l| l.count_ones() as usize).product();
    assert!(product <= 100_000_000, "product enumeration too large");
    fn rec(g: &Graph, lists: &[u64], colors: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in iter_bits(lists[v]) {
            let clash = iter_bits(g.neighbors(v) & mask_below(v)).any(|u| colors[u] == c);
            if !clash {
                colors[v] = c;
                if rec(g, lists, colors, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    rec(g, lists, &mut vec![usize::MAX; g.n()], 0)
}

/// The definitional choosability quantifier: every canonical assignment
/// admits a proper list coloring.
pub fn choosable_by_enumeration(g: &Graph, sizes: &ListSizes) -> bool {
    if (0..g.n()).any(|v| sizes.get(v) == 0) {
        return g.n() == 0;
    }
    for la in canonical_assignments(sizes) {
        if is_colorable_with_lists(g, &la)
            .expect("stream yields valid assignments")
            .is_none()
        {
            return false;
        }
    }
    true
}

/// Slow cross-check of the canonical stream: enumerate every assignment of
/// f(v)-subsets over the full universe Σf and count those already in
/// first-use form.
pub fn count_canonical_by_filter(sizes: &ListSizes) -> usize {
    let universe = sizes.sum();
    assert!(universe <= 24, "filter enumeration too large");
    let n = sizes.len();
    let mut lists = vec![0u64; n];
    fn rec(sizes: &ListSizes, universe: usize, lists: &mut Vec<u64>, v: usize, count: &mut usize) {
        if v == sizes.len() {
            if is_first_use_form(lists) {
                *count += 1;
            }
            return;
        }
        let mut mask = mask_below(sizes.get(v));
        loop {
            lists[v] = mask;
            rec(sizes, universe, lists, v + 1, count);
            // Gosper: next subset of the same size.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask & !mask_below(universe) != 0 {
                break;
            }
        }
    }
    let mut count = 0;
    if n == 0 {
        return 1;
    }
    rec(sizes, universe, &mut lists, 0, &mut count);
    count
}

/// Canonical means: scanning lists in vertex order, each list is a subset
/// of the colors already seen plus the next few fresh colors in order.
fn is_first_use_form(lists: &[u64]) -> bool {
    let mut used = 0usize;
    for &list in lists {
        let fresh = list & !mask_below(used);
        let fresh_count = fresh.count_ones() as usize;
        let expected = mask_below(used + fresh_count) & !mask_below(used);
        if fresh != expected {
            return false;
        }
        used += fresh_count;
    }
    true
}

/// The paintability recursion exactly as defined, with memoization but no
/// reductions; Painter may answer with any independent subset.
pub fn paintable_plain(g: &Graph, sizes: &ListSizes) -> bool {
    fn rec(g: &Graph, mask: u64, budgets: &[u8], memo: &mut HashMap<(u64, u64), bool>) -> bool {
        if mask == 0 {
            return true;
        }
        if iter_bits(mask).any(|v| budgets[v] == 0) {
            return false;
        }
        let mut packed = 0u64;
        for v in iter_bits(mask) {
            packed |= (budgets[v] as u64) << (4 * v);
        }
        if let Some(&r) = memo.get(&(mask, packed)) {
            return r;
        }
        let live: Vec<usize> = iter_bits(mask).collect();
        let mut result = true;
        'lister: for pick in 1u64..1 << live.len() {
            let mut marked = 0u64;
            for (i, &v) in live.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    marked |= 1 << v;
                }
            }
            let mut survives = false;
            // Painter tries every independent subset of the marked set.
            let mut paint = marked;
            loop {
                if is_independent(g, paint) {
                    let mut next = budgets.to_vec();
                    for v in iter_bits(marked & !paint) {
                        next[v] -= 1;
                    }
                    if rec(g, mask & !paint, &next, memo) {
                        survives = true;
                        break;
                    }
                }
                if paint == 0 {
                    break;
                }
                paint = (paint - 1) & marked;
            }
            if !survives {
                result = false;
                break 'lister;
            }
        }
        memo.insert((mask, packed), result);
        result
    }
    assert!(g.n() <= 16 && sizes.0.iter().all(|&f| f <= 15));
    let budgets: Vec<u8> = sizes.0.iter().map(|&f| f as u8).collect();
    rec(g, g.full_mask(), &budgets, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_basics() {
        assert_eq!(chromatic_by_enumeration(&Graph::cycle(5)), 3);
        assert_eq!(independence_by_subsets(&Graph::cycle(5)), 2);
        assert_eq!(mic_by_subsets(&Graph::cycle(5)), 4);
        assert_eq!(mic_by_subsets(&Graph::complete(4)), 3);
        assert!(colorable_by_product(
            &Graph::cycle(4),
            &[0b01, 0b10, 0b01, 0b10]
        ));
    }

    #[test]
    fn first_use_filter() {
        assert!(is_first_use_form(&[0b001, 0b011]));
        assert!(is_first_use_form(&[0b011, 0b101]));
        assert!(!is_first_use_form(&[0b010]));
        assert!(!is_first_use_form(&[0b001, 0b101]));
    }

    #[test]
    fn naive_blocks_of_bowtie() {
        let mut blocks = blocks_by_subsets(&Graph::bowtie());
        blocks.sort_unstable();
        assert_eq!(blocks, vec![0b00111, 0b11100]);
    }
}
