//! Analytical models for passive optical crossbars on chip.
//!
//! The crate compares crossbar implementations (matrix, multistage, and
//! serpentine-ring networks under their feasible layouts) by worst-case
//! optical loss, counts the photonic devices and wavelengths each needs,
//! constructs ring wavelength assignments, and explores the technology
//! design space with sweeps and analytic break-even frontiers. Every
//! closed-form distance and count formula is cross-checked against a
//! brute-force geometric model in [`oracle`].
//!
//! Everything is a pure function over immutable values; there is no global
//! state and all entry points are safe to call concurrently.

pub mod assign;
pub mod catalog;
pub mod dse;
mod error;
pub mod loss;
pub mod oracle;

pub use catalog::{
    CrossingModel, GridSpec, ImplSpec, Layout, ResourceCounts, TechParams, Topology,
};
pub use error::ModelError;
pub use loss::{Comparison, LossBreakdown, Winner};
