//! Exact cycle counting and extremal-graph tooling.
//!
//! The crate counts simple cycles and simple paths in graphs and loop-free
//! multigraphs exactly, evaluates the classical and modern upper/lower bounds
//! on the number of cycles with certified (directed-rounding) arithmetic,
//! builds the extremal constructions that realise those bounds, performs the
//! degree-reducing surgery used to show extremal graphs have bounded degree,
//! and runs isomorph-free brute-force searches for the maximum number of
//! cycles among graphs with a fixed number of edges.
//!
//! All counts are arbitrary precision ([`Count`]); all graphs are immutable
//! once built and can be shared freely across threads.

pub mod bounds;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod graph;
pub mod reduction;
pub mod search;

pub use counting::{Count, PairWeights};
pub use error::{Error, Result};
pub use graph::{DegreeStats, Multigraph, SimpleGraph};
