//! Exact f-paintability: the online list-coloring (Lister/Painter) game.
//!
//! The recursion is the standard one from the online list-coloring
//! literature (it is imported, not derived here): G is f-paintable iff G is
//! empty, or f(v) ≥ 1 for all v and for every nonempty S ⊆ V(G) there is an
//! independent I ⊆ S such that G − I is paintable with f reduced by 1 on
//! S ∖ I.
//!
//! Two verdict-preserving reductions keep the state space tame, both
//! cross-checked against the plain recursion by the test suite:
//!
//! * a vertex with f(v) > deg(v) can be deleted: Painter plays the smaller
//!   game and paints v whenever it is marked with no painted neighbor,
//!   which fails at most deg(v) < f(v) times;
//! * the game splits over connected components, since strategies compose
//!   per-component in both directions.
//!
//! Painter only ever needs maximal independent subsets of S: painting a
//! superset removes more vertices and charges fewer.

use crate::choosability::ListSizes;
use crate::error::Error;
use crate::graph::{iter_bits, Graph};
use std::collections::HashMap;

/// Default vertex capacity. The recursion quantifies over vertex subsets,
/// so cost grows like 4^n before memoization; 9 is comfortable, 10 slow.
pub const DEFAULT_PAINTABLE_CAP: usize = 9;

/// Decides f-paintability, capacity-capped at [`DEFAULT_PAINTABLE_CAP`].
pub fn is_paintable(g: &Graph, sizes: &ListSizes) -> Result<bool, Error> {
    is_paintable_with_cap(g, sizes, DEFAULT_PAINTABLE_CAP)
}

pub fn is_paintable_with_cap(g: &Graph, sizes: &ListSizes, cap: usize) -> Result<bool, Error> {
    if sizes.len() != g.n() {
        return Err(Error::Contract(format!(
            "size function covers {} vertices, graph has {}",
            sizes.len(),
            g.n()
        )));
    }
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "paintability decider",
            limit: cap,
            actual: g.n(),
        });
    }
    if sizes.0.iter().any(|&f| f > 15) {
        return Err(Error::Capacity {
            what: "paintability budget packing",
            limit: 15,
            actual: *sizes.0.iter().max().unwrap(),
        });
    }
    let mut memo = HashMap::new();
    let budgets: Vec<u8> = sizes.0.iter().map(|&f| f as u8).collect();
    Ok(painter_wins(g, g.full_mask(), &budgets, &mut memo))
}

/// 4-bit budget per vertex; dead vertices are zeroed so states collide.
fn pack(mask: u64, budgets: &[u8]) -> (u64, u64) {
    let mut packed = 0u64;
    for v in iter_bits(mask) {
        packed |= (budgets[v] as u64) << (4 * v);
    }
    (mask, packed)
}

fn painter_wins(
    g: &Graph,
    mask: u64,
    budgets: &[u8],
    memo: &mut HashMap<(u64, u64), bool>,
) -> bool {
    if mask == 0 {
        return true;
    }
    if iter_bits(mask).any(|v| budgets[v] == 0) {
        return false;
    }
    // Degree reduction.
    if let Some(v) =
        iter_bits(mask).find(|&v| budgets[v] as u32 > (g.neighbors(v) & mask).count_ones())
    {
        return painter_wins(g, mask & !(1 << v), budgets, memo);
    }
    // Component split.
    let first = mask.trailing_zeros() as usize;
    let comp = g.component_mask(first, mask);
    if comp != mask {
        return painter_wins(g, comp, budgets, memo)
            && painter_wins(g, mask & !comp, budgets, memo);
    }

    let key = pack(mask, budgets);
    if let Some(&v) = memo.get(&key) {
        return v;
    }

    let mut result = true;
    let live: Vec<usize> = iter_bits(mask).collect();
    let subsets = 1u64 << live.len();
    'lister: for pick in 1..subsets {
        let mut marked = 0u64;
        for (i, &v) in live.iter().enumerate() {
            if pick >> i & 1 == 1 {
                marked |= 1 << v;
            }
        }
        let mut responses = Vec::new();
        maximal_independent_subsets(g, marked, &mut responses);
        let mut painter_survives = false;
        for paint in responses {
            let mut next_budgets = budgets.to_vec();
            for v in iter_bits(marked & !paint) {
                next_budgets[v] -= 1;
            }
            if painter_wins(g, mask & !paint, &next_budgets, memo) {
                painter_survives = true;
                break;
            }
        }
        if !painter_survives {
            result = false;
            break 'lister;
        }
    }

    memo.insert(key, result);
    result
}

/// All maximal independent subsets of `within` (in the induced subgraph):
/// independent sets every other `within`-vertex has a neighbor in.
fn maximal_independent_subsets(g: &Graph, within: u64, out: &mut Vec<u64>) {
    fn rec(g: &Graph, chosen: u64, mut candidates: u64, within: u64, out: &mut Vec<u64>) {
        if candidates == 0 {
            let mut dominated = chosen;
            for v in iter_bits(chosen) {
                dominated |= g.neighbors(v);
            }
            if within & !dominated == 0 {
                out.push(chosen);
            }
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        rec(
            g,
            chosen | 1 << v,
            candidates & !g.neighbors(v),
            within,
            out,
        );
        rec(g, chosen, candidates, within, out);
    }
    rec(g, 0, within, within, out);
}
