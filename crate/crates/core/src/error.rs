//! Error type shared by all model modules.

use crate::catalog::{Layout, Topology};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("core array side must be an even integer >= 2, got {0}")]
    InvalidGridSize(u64),

    #[error("interface pitch must be positive and finite, got {0} cm")]
    InvalidPitch(f64),

    #[error("die area must be positive and finite, got {0} cm^2")]
    InvalidDieArea(f64),

    #[error("loss coefficient {name} must be non-negative and finite, got {value}")]
    InvalidLossCoefficient { name: &'static str, value: f64 },

    #[error("topology {topology} cannot be placed with layout {layout}")]
    InvalidPairing { topology: Topology, layout: Layout },

    #[error("crossing model has no calibration for {topology} with layout {layout} at n = {n}")]
    UncalibratedCrossing {
        topology: Topology,
        layout: Layout,
        n: u64,
    },

    #[error("ring assignment needs at least 2 ports, got {0}")]
    PortCountTooSmall(usize),

    #[error("bidirectional ring assignment needs an even port count, got {0}")]
    PortCountOdd(usize),

    #[error("waveguide wavelength capacity must be positive")]
    ZeroWaveguideCapacity,

    #[error("sweep needs at least one {0}")]
    EmptySweep(&'static str),

    #[error("frontier is degenerate (equal worst-case distance); no break-even line exists")]
    DegenerateFrontier,

    #[error("tech p_drop {tech} does not match the frontier context p_drop {frontier}")]
    PdropMismatch { tech: f64, frontier: f64 },

    #[error("verification sweep limit must be an even n in 2..=8, got {0}")]
    InvalidVerifyLimit(u64),
}
