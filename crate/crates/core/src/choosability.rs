//! Exact f-choosability: list colorability, canonical enumeration of list
//! assignments up to color renaming, and a complete pruned search for bad
//! assignments.
//!
//! `is_choosable` does not walk the canonical assignment stream (that
//! quantifier is astronomically large beyond 5–6 vertices); it searches the
//! same space reorganized by color classes, justified by two lemmas.
//!
//! **Connected supports.** For a color c, call S_c = {v : c ∈ L(v)} its
//! support. If G[S_c] is disconnected, splitting c into one fresh color per
//! component changes no list size and maps proper colorings across the
//! split in both directions, so badness (having no proper coloring) is
//! preserved. Hence G has a bad f-assignment iff it has one in which every
//! support induces a connected subgraph, and it suffices to enumerate
//! multisets of connected supports in which each vertex v lies in exactly
//! f(v) of them. The enumeration emits each multiset exactly once: supports
//! are ordered so that each one contains the lowest vertex whose list is
//! still short, and supports introduced at the same lowest vertex appear in
//! nondecreasing bitmask order.
//!
//! **Deferral pruning.** At a partial assignment, suppose G has a proper
//! partial coloring in which every vertex is either colored from its
//! current list or "deferred", where deferred vertices still have short
//! lists and form an independent set. Every completion gives each deferred
//! vertex at least one future color, and future colors are distinct from
//! all current ones, so the partial coloring extends: the subtree contains
//! no bad assignment and is pruned. When no list is short, the same check
//! degenerates to plain list colorability, so a failure there *is* a bad
//! assignment.
//!
//! Both reductions are verdict-preserving; the test suites cross-check the
//! pruned decider against the naive all-assignments oracle.
//!
//! Witness caveat: when a graph is not choosable, which bad assignment is
//! reported depends on search order and should be treated as unspecified;
//! verdicts are deterministic.

use crate::error::Error;
use crate::graph::{iter_bits, mask_below, Graph};
use crate::solve::chromatic_number_with_cap;
use serde::{Deserialize, Serialize};

/// Default vertex capacity for `is_choosable`. The search is exact but
/// exponential; beyond ~10 vertices (at list size 3) it stops being a
/// desk-scale computation.
pub const DEFAULT_CHOOSABLE_CAP: usize = 10;

/// Per-vertex color lists over the integer universe `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    /// One color bitset per vertex.
    pub lists: Vec<u64>,
    pub universe: usize,
}

impl ListAssignment {
    pub fn new(lists: Vec<u64>, universe: usize) -> Self {
        ListAssignment { lists, universe }
    }

    /// The identical-lists assignment {0,…,c−1} on every vertex.
    pub fn identical(n: usize, c: usize) -> Self {
        ListAssignment {
            lists: vec![mask_below(c); n],
            universe: c,
        }
    }

    pub fn list_sizes(&self) -> Vec<usize> {
        self.lists.iter().map(|l| l.count_ones() as usize).collect()
    }
}

/// Per-vertex requested list sizes (the f of f-choosability).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListSizes(pub Vec<usize>);

impl ListSizes {
    /// The constant function f ≡ c.
    pub fn constant(n: usize, c: usize) -> Self {
        ListSizes(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Restriction to the vertices of `mask`, relabeled in mask order.
    pub fn restrict(&self, mask: u64) -> ListSizes {
        ListSizes(iter_bits(mask).map(|v| self.0[v]).collect())
    }
}

/// Outcome of a choosability decision; `witness` is a bad assignment when
/// the graph is not choosable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    pub witness: Option<ListAssignment>,
}

/// Finds a proper coloring with c(v) ∈ la(v), if any.
///
/// Errors when a list references a color outside the universe or the list
/// count does not match the graph.
pub fn is_colorable_with_lists(
    g: &Graph,
    la: &ListAssignment,
) -> Result<Option<Vec<usize>>, Error> {
    if la.lists.len() != g.n() {
        return Err(Error::Contract(format!(
            "assignment covers {} vertices, graph has {}",
            la.lists.len(),
            g.n()
        )));
    }
    if la.universe > 64 {
        return Err(Error::Contract(format!(
            "universe {} exceeds 64 colors",
            la.universe
        )));
    }
    for (v, &list) in la.lists.iter().enumerate() {
        if list & !mask_below(la.universe) != 0 {
            return Err(Error::Contract(format!(
                "list of vertex {v} references a color outside the universe"
            )));
        }
    }
    let mut colors = vec![usize::MAX; g.n()];
    if color_from_lists(g, &la.lists, &mut colors) {
        Ok(Some(colors))
    } else {
        Ok(None)
    }
}

/// Most-constrained-first backtracking over list colors.
fn color_from_lists(g: &Graph, lists: &[u64], colors: &mut [usize]) -> bool {
    let mut pick: Option<(usize, u64)> = None;
    for v in 0..g.n() {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut forbidden = 0u64;
        for u in iter_bits(g.neighbors(v)) {
            if colors[u] != usize::MAX {
                forbidden |= 1 << colors[u];
            }
        }
        let avail = lists[v] & !forbidden;
        if pick.is_none_or(|(_, a)| avail.count_ones() < a.count_ones()) {
            pick = Some((v, avail));
        }
    }
    let Some((v, avail)) = pick else {
        return true;
    };
    for c in iter_bits(avail) {
        colors[v] = c;
        if color_from_lists(g, lists, colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Enumerates list assignments with |la(v)| = f(v), complete up to color
/// renaming: colors are introduced in first-use order along the fixed
/// vertex order. For each vertex the choices run through 0,1,…,f(v) fresh
/// colors, old subsets in increasing bitmask order, so the stream is
/// deterministic and reproducible.
///
/// Capping the universe at Σ f(v) loses nothing: an assignment mentions at
/// most Σ f(v) distinct colors in total, and renaming them into first-use
/// order (which changes no colorability) lands it in this stream.
///
/// The graph plays no role in the quantifier; only the sizes do.
pub fn canonical_assignments(sizes: &ListSizes) -> CanonicalAssignments {
    CanonicalAssignments {
        sizes: sizes.clone(),
        stack: Vec::new(),
        lists: Vec::new(),
        started: false,
        done: sizes.sum() > 64,
    }
}

pub struct CanonicalAssignments {
    sizes: ListSizes,
    stack: Vec<Frame>,
    lists: Vec<u64>,
    started: bool,
    done: bool,
}

struct Frame {
    used_before: usize,
    fresh: usize,
    old_mask: u64,
}

impl Frame {
    fn list(&self) -> u64 {
        let fresh_mask = mask_below(self.used_before + self.fresh) & !mask_below(self.used_before);
        self.old_mask | fresh_mask
    }

    fn used_after(&self) -> usize {
        self.used_before + self.fresh
    }
}

/// First subset of `universe_bits` low bits with `size` bits set, if any.
fn first_combination(size: usize, universe_bits: usize) -> Option<u64> {
    if size > universe_bits {
        None
    } else {
        Some(mask_below(size))
    }
}

/// Next-larger mask with the same popcount within `universe_bits` bits
/// (Gosper's hack), or None when exhausted.
fn next_combination(mask: u64, universe_bits: usize) -> Option<u64> {
    if mask == 0 {
        return None; // the empty subset is unique
    }
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    let next = (((r ^ mask) >> 2) / c) | r;
    if next & !mask_below(universe_bits) != 0 {
        None
    } else {
        Some(next)
    }
}

impl CanonicalAssignments {
    /// First choice for vertex `v` given `used` colors so far: fewest fresh
    /// colors first (fresh = f(v) − old subset size). Taking all colors
    /// fresh is always admissible, so a first choice always exists.
    fn open_frame(&self, v: usize, used: usize) -> Frame {
        let f = self.sizes.get(v);
        for fresh in 0..f {
            if let Some(old_mask) = first_combination(f - fresh, used) {
                return Frame {
                    used_before: used,
                    fresh,
                    old_mask,
                };
            }
        }
        Frame {
            used_before: used,
            fresh: f,
            old_mask: 0,
        }
    }

    /// Advances the frame to its next choice, or retires it.
    fn advance_frame(&self, v: usize, frame: &mut Frame) -> bool {
        let f = self.sizes.get(v);
        if let Some(next) = next_combination(frame.old_mask, frame.used_before) {
            frame.old_mask = next;
            return true;
        }
        let mut fresh = frame.fresh + 1;
        while fresh <= f {
            if let Some(old_mask) = first_combination(f - fresh, frame.used_before) {
                frame.fresh = fresh;
                frame.old_mask = old_mask;
                return true;
            }
            fresh += 1;
        }
        false
    }

    fn fill_down(&mut self) {
        while self.stack.len() < self.sizes.len() {
            let v = self.stack.len();
            let used = self.stack.last().map_or(0, Frame::used_after);
            let frame = self.open_frame(v, used);
            self.lists.push(frame.list());
            self.stack.push(frame);
        }
    }

    fn step_up(&mut self) -> bool {
        while let Some(mut frame) = self.stack.pop() {
            let v = self.stack.len();
            self.lists.pop();
            if self.advance_frame(v, &mut frame) {
                self.lists.push(frame.list());
                self.stack.push(frame);
                return true;
            }
        }
        false
    }
}

impl Iterator for CanonicalAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        if self.done {
            return None;
        }
        if self.started && !self.step_up() {
            self.done = true;
            return None;
        }
        self.started = true;
        self.fill_down();
        let universe = self.stack.last().map_or(0, Frame::used_after);
        Some(ListAssignment::new(self.lists.clone(), universe))
    }
}

/// Decides f-choosability, capacity-capped at [`DEFAULT_CHOOSABLE_CAP`].
pub fn is_choosable(g: &Graph, sizes: &ListSizes) -> Result<ChoosabilityVerdict, Error> {
    is_choosable_with_cap(g, sizes, DEFAULT_CHOOSABLE_CAP)
}

/// Decides whether every f-assignment admits a proper list coloring, by
/// the pruned bad-assignment search described in the module docs.
pub fn is_choosable_with_cap(
    g: &Graph,
    sizes: &ListSizes,
    cap: usize,
) -> Result<ChoosabilityVerdict, Error> {
    if sizes.len() != g.n() {
        return Err(Error::Contract(format!(
            "size function covers {} vertices, graph has {}",
            sizes.len(),
            g.n()
        )));
    }
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "choosability decider",
            limit: cap,
            actual: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok(ChoosabilityVerdict {
            choosable: true,
            witness: None,
        });
    }
    // Witnesses are bitset assignments, so the whole color budget (fresh
    // colors for reduced-away vertices included) must fit one word.
    if sizes.sum() > 64 {
        return Err(Error::Capacity {
            what: "choosability decider color budget",
            limit: 64,
            actual: sizes.sum(),
        });
    }

    // A vertex demanding an empty list is unconditionally bad.
    if let Some(v) = (0..g.n()).find(|&v| sizes.get(v) == 0) {
        let mut lists = vec![0u64; g.n()];
        let mut next = 0;
        for (u, list) in lists.iter_mut().enumerate() {
            if u == v {
                continue;
            }
            *list = mask_below(next + sizes.get(u)) & !mask_below(next);
            next += sizes.get(u);
        }
        return Ok(not_choosable(g, ListAssignment::new(lists, next.max(1))));
    }

    // Greedy reduction: a vertex with more colors demanded than neighbors
    // can always be colored last, in either direction of the equivalence,
    // so it can be deleted without changing the verdict.
    let mut live = g.full_mask();
    let mut deleted = Vec::new();
    loop {
        let victim =
            iter_bits(live).find(|&v| sizes.get(v) > (g.neighbors(v) & live).count_ones() as usize);
        match victim {
            Some(v) => {
                live &= !(1 << v);
                deleted.push(v);
            }
            None => break,
        }
    }
    if live == 0 {
        return Ok(ChoosabilityVerdict {
            choosable: true,
            witness: None,
        });
    }

    let (core, map) = g.induced(live);
    let core_sizes = sizes.restrict(live);

    // Identical-lists shortcut: with a constant size c and χ(core) > c the
    // ordinary-coloring assignment is already bad.
    let c0 = core_sizes.get(0);
    if core_sizes.0.iter().all(|&c| c == c0) && chromatic_number_with_cap(&core, core.n())? > c0 {
        let core_witness = ListAssignment::identical(core.n(), c0);
        let witness = extend_witness(g, sizes, core_witness, &map, &deleted);
        return Ok(not_choosable(g, witness));
    }

    let mut search = BadAssignmentSearch {
        g: &core,
        remaining: core_sizes.0.clone(),
        lists: vec![0; core.n()],
        supports: Vec::new(),
    };
    match search.run(0, usize::MAX) {
        Some(core_witness) => {
            let witness = extend_witness(g, sizes, core_witness, &map, &deleted);
            Ok(not_choosable(g, witness))
        }
        None => Ok(ChoosabilityVerdict {
            choosable: true,
            witness: None,
        }),
    }
}

fn not_choosable(g: &Graph, witness: ListAssignment) -> ChoosabilityVerdict {
    debug_assert!(matches!(is_colorable_with_lists(g, &witness), Ok(None)));
    ChoosabilityVerdict {
        choosable: false,
        witness: Some(witness),
    }
}

/// Lifts a bad assignment on the reduced core back to the full graph:
/// deleted vertices get lists of fresh colors, which cannot create a
/// coloring the core did not have.
fn extend_witness(
    g: &Graph,
    sizes: &ListSizes,
    core_witness: ListAssignment,
    map: &[usize],
    deleted: &[usize],
) -> ListAssignment {
    let mut lists = vec![0u64; g.n()];
    for (i, &v) in map.iter().enumerate() {
        lists[v] = core_witness.lists[i];
    }
    let mut next = core_witness.universe;
    for &v in deleted {
        lists[v] = mask_below(next + sizes.get(v)) & !mask_below(next);
        next += sizes.get(v);
    }
    debug_assert!(next <= 64);
    for (v, &list) in lists.iter().enumerate() {
        debug_assert_eq!(list.count_ones() as usize, sizes.get(v));
    }
    ListAssignment::new(lists, next)
}

struct BadAssignmentSearch<'a> {
    g: &'a Graph,
    remaining: Vec<usize>,
    lists: Vec<u64>,
    supports: Vec<u64>,
}

impl BadAssignmentSearch<'_> {
    fn deficient_mask(&self) -> u64 {
        let mut m = 0u64;
        for (v, &r) in self.remaining.iter().enumerate() {
            if r > 0 {
                m |= 1 << v;
            }
        }
        m
    }

    /// Returns a bad completed assignment below the current node, if any.
    fn run(&mut self, last_support: u64, last_vstar: usize) -> Option<ListAssignment> {
        let deficient = self.deficient_mask();
        if colorable_with_deferral(self.g, &self.lists, deficient) {
            return None; // every completion is colorable
        }
        if deficient == 0 {
            // Complete and not colorable: a bad assignment.
            return Some(ListAssignment::new(self.lists.clone(), self.supports.len()));
        }
        let vstar = deficient.trailing_zeros() as usize;
        let floor = if vstar == last_vstar { last_support } else { 0 };
        let mut candidates = Vec::new();
        connected_sets_through(self.g, vstar, deficient, &mut candidates);
        candidates.sort_unstable();
        for support in candidates {
            if support < floor {
                continue;
            }
            for v in iter_bits(support) {
                self.remaining[v] -= 1;
                self.lists[v] |= 1 << self.supports.len();
            }
            self.supports.push(support);
            if let Some(bad) = self.run(support, vstar) {
                return Some(bad);
            }
            self.supports.pop();
            for v in iter_bits(support) {
                self.remaining[v] += 1;
                self.lists[v] &= !(1 << self.supports.len());
            }
        }
        None
    }
}

/// Enumerates every subset of `allowed` that contains `seed` and induces a
/// connected subgraph, each exactly once (branch on one frontier vertex,
/// then ban it from the siblings).
fn connected_sets_through(g: &Graph, seed: usize, allowed: u64, out: &mut Vec<u64>) {
    // Invariant: frontier = N(cur) ∩ allowed ∖ cur ∖ banned. A proper
    // superset of cur contains some frontier vertex; the child taking v
    // owns exactly the supersets containing v and no earlier sibling.
    fn expand(g: &Graph, allowed: u64, cur: u64, frontier: u64, banned: u64, out: &mut Vec<u64>) {
        out.push(cur);
        let mut rest = frontier;
        let mut banned = banned;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let vbit = 1u64 << v;
            let child_frontier = (rest | (g.neighbors(v) & allowed & !banned)) & !(cur | vbit);
            expand(g, allowed, cur | vbit, child_frontier, banned, out);
            banned |= vbit;
        }
    }
    debug_assert!(allowed >> seed & 1 == 1);
    expand(g, allowed, 1 << seed, g.neighbors(seed) & allowed, 0, out);
}

/// True iff G admits a proper partial coloring where every vertex either
/// takes a color from its current list or is deferred, with the deferred
/// vertices drawn from `deferrable` and pairwise nonadjacent.
fn colorable_with_deferral(g: &Graph, lists: &[u64], deferrable: u64) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Unset,
        Colored(u32),
        Deferred,
    }

    fn rec(g: &Graph, lists: &[u64], deferrable: u64, states: &mut [State], deferred: u64) -> bool {
        // Most-constrained vertex first.
        let mut pick: Option<(usize, u64, bool, u32)> = None;
        for v in 0..g.n() {
            if states[v] != State::Unset {
                continue;
            }
            let mut forbidden = 0u64;
            for u in iter_bits(g.neighbors(v)) {
                if let State::Colored(c) = states[u] {
                    forbidden |= 1 << c;
                }
            }
            let avail = lists[v] & !forbidden;
            let can_defer = deferrable >> v & 1 == 1 && g.neighbors(v) & deferred == 0;
            let options = avail.count_ones() + can_defer as u32;
            if options == 0 {
                return false;
            }
            if pick.is_none_or(|(_, _, _, best)| options < best) {
                pick = Some((v, avail, can_defer, options));
            }
        }
        let Some((v, avail, can_defer, _)) = pick else {
            return true;
        };
        for c in iter_bits(avail) {
            states[v] = State::Colored(c as u32);
            if rec(g, lists, deferrable, states, deferred) {
                return true;
            }
        }
        if can_defer {
            states[v] = State::Deferred;
            if rec(g, lists, deferrable, states, deferred | 1 << v) {
                return true;
            }
        }
        states[v] = State::Unset;
        false
    }

    let mut states = vec![State::Unset; g.n()];
    rec(g, lists, deferrable, &mut states, 0)
}
