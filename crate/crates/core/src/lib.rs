//! Vertex cover on hyperbolic random graphs.
//!
//! This crate holds the pure algorithmic part of the toolkit and only needs
//! `alloc`:
//!
//! * [`geometry`]: distances, connection and dominance angles, the radial
//!   law and the analytic measures of the hyperbolic disk model.
//! * [`generator`]: seeded sampling of hyperbolic random graphs.
//! * [`graph`]: a compact undirected simple graph, vertex sets, induced
//!   subgraphs and cover verification.
//! * [`kernel`]: the dominance reduction rule.
//! * [`decomposition`]: circular-arc supergraphs, path decompositions from
//!   arcs, elimination-ordering tree decompositions and their validation.
//! * [`solver`]: exact minimum vertex cover (tree-decomposition DP,
//!   branch-and-reduce and the combined pipeline).
//! * [`approx`]: max-degree greedy and k-adaptive greedy.
//!
//! File formats, experiments and the command line live in the `hypcover`
//! crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod approx;
pub mod decomposition;
pub mod error;
pub mod generator;
pub mod geometry;
pub mod graph;
pub mod kernel;
pub mod monitor;
pub mod quad;
pub mod solver;

pub use error::{Error, Result};
pub use generator::GraphSample;
pub use geometry::{ModelParams, PolarPoint};
pub use graph::{Graph, InducedSubgraph, VertexSet};
pub use monitor::{Monitor, Unbounded};
