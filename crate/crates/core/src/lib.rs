//! Exact decision procedures and inequality verifiers for list-critical
//! graph theory at desk scale (n ≤ 64 graphs, searches up to ~12 vertices).
//!
//! The crate is organized around five concerns:
//!
//! * [`graph`], [`graph6`], [`blocks`], [`solve`], [`canon`], [`enumerate`]:
//!   the graph substrate with bitset graphs, graph6 I/O, block decompositions,
//!   exact chromatic/independence solvers, canonical labeling and
//!   isomorphism-reduced enumeration of small graphs.
//! * [`choosability`]: exact f-choosability. List-colorability, canonical
//!   enumeration of list assignments up to color renaming, and a pruned
//!   complete search for bad assignments.
//! * [`paintability`]: the online analogue (Lister/Painter game).
//! * [`criticality`]: certification of k-critical, k-list-critical and
//!   online k-list-critical graphs, plus graph6 stream filtering.
//! * [`structure`] and [`bounds`]: Gallai-tree machinery (recognition,
//!   enumeration, β), the mic/restricted-M optimizers, and the inequality
//!   checkers up to the average-degree bound and its full proof chain.
//!
//! Everything is exact: inequality arithmetic uses rationals, never floats.
//! All types are immutable after construction and all operations are pure
//! functions; parallelism, when wanted, belongs to the caller (shard per
//! graph). The [`oracle`] module holds deliberately naive reference
//! implementations used by the test suites to cross-check the fast paths.

#![forbid(unsafe_code)]

pub mod blocks;
pub mod bounds;
pub mod canon;
pub mod choosability;
pub mod criticality;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod paintability;
pub mod ratio;
pub mod solve;
pub mod structure;

pub use error::Error;
pub use graph::Graph;
