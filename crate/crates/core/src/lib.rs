//! Theta-4 graphs on planar point sets, a memoryless local routing
//! algorithm over them, and machine-checked competitive-ratio analysis,
//! all in exact rational arithmetic.
//!
//! The crate is organized as:
//!
//! - [`geometry`]: exact rational points, cones, projections, metrics,
//!   and the 8-element square-symmetry group.
//! - [`graph`]: Theta-k graph construction and structural validation.
//! - [`router`]: the local routing algorithm (for k = 4) together with a
//!   simpler cone-greedy baseline for general k.
//! - [`analysis`]: phase decomposition of route traces and the checkers
//!   that certify every step of the competitive-ratio argument, plus
//!   shortest-path and ratio utilities.
//! - [`instances`]: instance generators (uniform, cluster, grid, and an
//!   adversarial spiral family) and point-file parsing.
//! - [`io`]: JSON serialization for graphs, traces, and check reports.
//! - [`render`]: deterministic SVG rendering of graphs and routes.

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod instances;
pub mod io;
pub mod render;
pub mod router;

pub use error::Error;
