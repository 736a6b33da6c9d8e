//! Flagstone: exact computations on flag simplicial complexes and d-leveled
//! graphs.
//!
//! - [`graph`]: bitset graphs, cliques, links, joins, generators and
//!   complete-multipartite subgraph search.
//! - [`complex`]: simplicial complexes, f-/h-/γ-vectors, Euler
//!   characteristic, Dehn–Sommerville and Klee relations.
//! - [`structure`]: flagness, weak pseudomanifolds, d-leveled graphs and
//!   type-(t, η, C) partitions.
//! - [`bounds`]: edge bounds, the γ₂ inequality and per-instance reports.
//! - [`search`]: exhaustive and randomized searches plus corpus checks.
//! - [`io`]: edge-list, graph6 and facet-list formats.
//!
//! All arithmetic is exact (machine integers for counts, big integers and
//! rationals for transforms and bounds).

pub mod bitset;
pub mod bounds;
pub mod complex;
pub mod error;
pub mod graph;
pub mod io;
pub mod rational;
pub mod search;
pub mod structure;

pub use error::{Error, ParseError, Result};
pub use graph::{Clique, Graph};
