//! Closed-form topology, layout, and device-resource formulas, plus the
//! published injection-loss parameter presets.
//!
//! All lengths are carried in centimetres. Counts are exact integers.

use crate::error::ModelError;
use std::collections::BTreeMap;
use std::fmt;

/// The three per-event injection loss coefficients.
///
/// `p_propagation` is in dB/cm; `p_crossing` and `p_drop` are in dB per
/// occurrence. Coefficients are validated non-negative and finite at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TechParams {
    p_propagation_db_per_cm: f64,
    p_crossing_db: f64,
    p_drop_db: f64,
    name: Option<String>,
}

impl TechParams {
    pub fn new(
        p_propagation_db_per_cm: f64,
        p_crossing_db: f64,
        p_drop_db: f64,
    ) -> Result<Self, ModelError> {
        check_coefficient("p_propagation", p_propagation_db_per_cm)?;
        check_coefficient("p_crossing", p_crossing_db)?;
        check_coefficient("p_drop", p_drop_db)?;
        Ok(Self {
            p_propagation_db_per_cm,
            p_crossing_db,
            p_drop_db,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Published parameter sets, in table order (P_crossing, P_propagation, P_drop):
    /// pan2010 (0.05, 1, 1.5), kirman2010 (0.12, 1, 1),
    /// biberman2011 (0.05, 0.5, 0.5), koka2012 (0.2, 0.1, 1.5).
    pub fn presets() -> Vec<TechParams> {
        vec![
            Self::preset_values(0.05, 1.0, 1.5, "pan2010"),
            Self::preset_values(0.12, 1.0, 1.0, "kirman2010"),
            Self::preset_values(0.05, 0.5, 0.5, "biberman2011"),
            Self::preset_values(0.2, 0.1, 1.5, "koka2012"),
        ]
    }

    /// Case-insensitive preset lookup.
    pub fn preset(name: &str) -> Option<TechParams> {
        let wanted = name.to_ascii_lowercase();
        Self::presets()
            .into_iter()
            .find(|p| p.name.as_deref() == Some(wanted.as_str()))
    }

    fn preset_values(crossing: f64, propagation: f64, drop: f64, name: &str) -> TechParams {
        TechParams {
            p_propagation_db_per_cm: propagation,
            p_crossing_db: crossing,
            p_drop_db: drop,
            name: Some(name.to_string()),
        }
    }

    pub fn p_propagation_db_per_cm(&self) -> f64 {
        self.p_propagation_db_per_cm
    }

    pub fn p_crossing_db(&self) -> f64 {
        self.p_crossing_db
    }

    pub fn p_drop_db(&self) -> f64 {
        self.p_drop_db
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

fn check_coefficient(name: &'static str, value: f64) -> Result<(), ModelError> {
    if !value.is_finite() || value < 0.0 {
        return Err(ModelError::InvalidLossCoefficient { name, value });
    }
    Ok(())
}

/// Architecture geometry: an n-by-n core array with interface pitch d.
///
/// `n` must be even and at least 2; the port count is m = n^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    n: u64,
    pitch_cm: f64,
}

impl GridSpec {
    pub fn new(n: u64, pitch_cm: f64) -> Result<Self, ModelError> {
        ensure_even_side(n)?;
        if !pitch_cm.is_finite() || pitch_cm <= 0.0 {
            return Err(ModelError::InvalidPitch(pitch_cm));
        }
        Ok(Self { n, pitch_cm })
    }

    /// Geometry for a square die of the given area: pitch = sqrt(area)/n.
    pub fn from_die_area(die_area_cm2: f64, n: u64) -> Result<Self, ModelError> {
        let pitch = pitch_from_die(die_area_cm2, n)?;
        Self::new(n, pitch)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn pitch_cm(&self) -> f64 {
        self.pitch_cm
    }

    /// Number of crossbar ports (IP cores), m = n^2.
    pub fn ports(&self) -> u64 {
        self.n * self.n
    }
}

/// Interface pitch for an n-by-n array on a square die: sqrt(area)/n.
pub fn pitch_from_die(die_area_cm2: f64, n: u64) -> Result<f64, ModelError> {
    if !die_area_cm2.is_finite() || die_area_cm2 <= 0.0 {
        return Err(ModelError::InvalidDieArea(die_area_cm2));
    }
    ensure_even_side(n)?;
    Ok(die_area_cm2.sqrt() / n as f64)
}

fn ensure_even_side(n: u64) -> Result<(), ModelError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(ModelError::InvalidGridSize(n));
    }
    Ok(())
}

/// Crossbar network topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Topology {
    Matrix,
    LambdaRouter,
    Snake,
    OrnocC,
    OrnocCCC,
}

impl Topology {
    pub const ALL: [Topology; 5] = [
        Topology::Matrix,
        Topology::LambdaRouter,
        Topology::Snake,
        Topology::OrnocC,
        Topology::OrnocCCC,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Topology::Matrix => "matrix",
            Topology::LambdaRouter => "lambda-router",
            Topology::Snake => "snake",
            Topology::OrnocC => "ornoc-c",
            Topology::OrnocCCC => "ornoc-ccc",
        }
    }

    pub fn parse(name: &str) -> Option<Topology> {
        let wanted = name.to_ascii_lowercase();
        Topology::ALL.into_iter().find(|t| t.label() == wanted)
    }

    /// Ring topologies use the serpentine layout; the others sit in a
    /// central crossbar box reached through layout A or B.
    pub fn is_ring(&self) -> bool {
        matches!(self, Topology::OrnocC | Topology::OrnocCCC)
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Physical placement of the network interfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layout {
    A,
    B,
    Serpentine,
}

impl Layout {
    pub fn label(&self) -> &'static str {
        match self {
            Layout::A => "a",
            Layout::B => "b",
            Layout::Serpentine => "serpentine",
        }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A validated (topology, layout) pair: one of the eight implementations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ImplSpec {
    topology: Topology,
    layout: Layout,
}

impl ImplSpec {
    pub fn new(topology: Topology, layout: Layout) -> Result<Self, ModelError> {
        let ok = match topology {
            Topology::OrnocC | Topology::OrnocCCC => layout == Layout::Serpentine,
            _ => matches!(layout, Layout::A | Layout::B),
        };
        if !ok {
            return Err(ModelError::InvalidPairing { topology, layout });
        }
        Ok(Self { topology, layout })
    }

    /// The eight valid implementations in canonical order.
    pub fn all() -> Vec<ImplSpec> {
        let mut out = Vec::with_capacity(8);
        for topology in [Topology::Matrix, Topology::LambdaRouter, Topology::Snake] {
            for layout in [Layout::A, Layout::B] {
                out.push(ImplSpec { topology, layout });
            }
        }
        out.push(ImplSpec {
            topology: Topology::OrnocC,
            layout: Layout::Serpentine,
        });
        out.push(ImplSpec {
            topology: Topology::OrnocCCC,
            layout: Layout::Serpentine,
        });
        out
    }

    /// Command-line / report name: `matrix-a`, `lambda-router-b`, `ornoc-ccc`, ...
    pub fn name(&self) -> String {
        match self.topology {
            Topology::OrnocC | Topology::OrnocCCC => self.topology.label().to_string(),
            _ => format!("{}-{}", self.topology.label(), self.layout.label()),
        }
    }

    pub fn parse_name(name: &str) -> Option<ImplSpec> {
        ImplSpec::all()
            .into_iter()
            .find(|i| i.name() == name.to_ascii_lowercase())
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }
}

impl fmt::Display for ImplSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// How many waveguide crossings the physical layout adds on top of the
/// network-internal count.
///
/// The published per-topology crossing formulas count the network itself
/// (layout A routing adds none). Layout B shortens the worst-case distance
/// at the price of extra crossings; the only value recoverable from the
/// published loss figures is +51 for layout B at n = 8, which
/// `CalibratedN8` applies. `ZeroExtra` treats the layout term as zero and
/// tags every layout-B result with a warning. `CustomTable` takes
/// user-supplied extras keyed by (topology, n).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum CrossingModel {
    ZeroExtra,
    #[default]
    CalibratedN8,
    CustomTable(BTreeMap<(Topology, u64), u64>),
}

/// Extra crossing count for one query, plus the assumption string (if any)
/// that must travel with results derived from it.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossingResolution {
    pub extra: u64,
    pub assumption: Option<String>,
}

/// Layout-B extra crossings at n = 8, recovered by inverting the loss
/// expression against the published lambda-router-b totals; both parameter
/// sets that quote a total agree on the value.
pub const LAYOUT_B_EXTRA_N8: u64 = 51;

impl CrossingModel {
    pub fn label(&self) -> &'static str {
        match self {
            CrossingModel::ZeroExtra => "zero-extra",
            CrossingModel::CalibratedN8 => "calibrated-n8",
            CrossingModel::CustomTable(_) => "custom-table",
        }
    }

    /// Resolve the layout-extra crossing count for one implementation.
    pub fn resolve(
        &self,
        topology: Topology,
        layout: Layout,
        n: u64,
    ) -> Result<CrossingResolution, ModelError> {
        if layout != Layout::B {
            return Ok(CrossingResolution {
                extra: 0,
                assumption: None,
            });
        }
        match self {
            CrossingModel::ZeroExtra => Ok(CrossingResolution {
                extra: 0,
                assumption: Some(format!(
                    "{}-b at n={}: layout-extra crossings assumed 0 (zero-extra model)",
                    topology.label(),
                    n
                )),
            }),
            CrossingModel::CalibratedN8 => {
                if n == 8 {
                    let assumption = if topology == Topology::LambdaRouter {
                        None
                    } else {
                        Some(format!(
                            "{}-b at n=8: +{} layout-extra crossings reuse the lambda-router-b calibration",
                            topology.label(),
                            LAYOUT_B_EXTRA_N8
                        ))
                    };
                    Ok(CrossingResolution {
                        extra: LAYOUT_B_EXTRA_N8,
                        assumption,
                    })
                } else {
                    Err(ModelError::UncalibratedCrossing {
                        topology,
                        layout,
                        n,
                    })
                }
            }
            CrossingModel::CustomTable(table) => match table.get(&(topology, n)) {
                Some(&extra) => Ok(CrossingResolution {
                    extra,
                    assumption: None,
                }),
                None => Err(ModelError::UncalibratedCrossing {
                    topology,
                    layout,
                    n,
                }),
            },
        }
    }
}

/// Longest source-to-destination waveguide distance, in cm.
///
/// Layout A: 3d at n = 2, otherwise (4*floor((n-1)/2) + 2n)*d.
/// Layout B: 2*(n-1)*d. Serpentine ring: (n^2-2)*d + (n-1)*d for the
/// single-direction ring, (floor(n^2/2)-1)*d + (n-1)*d when both rotation
/// directions are available.
pub fn d_max(impl_spec: &ImplSpec, grid: &GridSpec) -> f64 {
    let n = grid.n();
    let m = grid.ports();
    let units: u64 = match (impl_spec.topology(), impl_spec.layout()) {
        (Topology::OrnocC, _) => (m - 2) + (n - 1),
        (Topology::OrnocCCC, _) => (m / 2 - 1) + (n - 1),
        (_, Layout::A) => {
            if n == 2 {
                3
            } else {
                4 * ((n - 1) / 2) + 2 * n
            }
        }
        (_, Layout::B) => 2 * (n - 1),
        (_, Layout::Serpentine) => unreachable!("ImplSpec construction forbids this pairing"),
    };
    units as f64 * grid.pitch_cm()
}

/// Worst-case waveguide crossing count: the network-internal term plus the
/// layout extra from the crossing model. Ring implementations never cross.
pub fn n_crossing(
    impl_spec: &ImplSpec,
    grid: &GridSpec,
    model: &CrossingModel,
) -> Result<u64, ModelError> {
    let m = grid.ports();
    let network = match impl_spec.topology() {
        Topology::Matrix => 2 * m - 3,
        Topology::LambdaRouter => m - 1,
        Topology::Snake => 2 * m - 5,
        Topology::OrnocC | Topology::OrnocCCC => return Ok(0),
    };
    let resolution = model.resolve(impl_spec.topology(), impl_spec.layout(), grid.n())?;
    Ok(network + resolution.extra)
}

/// Worst-case drop count: once in the network and once at the receiver for
/// the crossbar-box networks; only the receiver drop for the rings.
pub fn n_drop(impl_spec: &ImplSpec) -> u64 {
    if impl_spec.topology().is_ring() {
        1
    } else {
        2
    }
}

/// Device-resource totals for one topology at array side n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceCounts {
    /// Passive MRs in the crossbar before any reduction.
    pub mr_crossbar_initial: u64,
    /// Passive MRs left after removing the unused ones.
    pub mr_crossbar_reduced: u64,
    /// Drop MRs in the receiver interfaces.
    pub mr_receiver: u64,
    /// On-chip laser sources.
    pub lasers: u64,
    /// Minimum wavelengths on a single waveguide (per direction).
    pub min_wavelengths: u64,
}

/// Resource counts for a topology interconnecting m = n^2 ports.
pub fn resource_counts(topology: Topology, n: u64) -> Result<ResourceCounts, ModelError> {
    ensure_even_side(n)?;
    let m = n * n;
    let (mr_crossbar_initial, mr_crossbar_reduced) = match topology {
        Topology::Matrix => (m * m, (m - 1) * m),
        Topology::LambdaRouter | Topology::Snake => ((m - 1) * m, (m - 2) * m),
        Topology::OrnocC | Topology::OrnocCCC => (0, 0),
    };
    let min_wavelengths = match topology {
        Topology::Matrix => m - 1,
        Topology::LambdaRouter | Topology::Snake => m,
        Topology::OrnocC => m * (m - 1) / 2,
        Topology::OrnocCCC => m * (m - 1) / 4,
    };
    Ok(ResourceCounts {
        mr_crossbar_initial,
        mr_crossbar_reduced,
        mr_receiver: (m - 1) * m,
        lasers: (m - 1) * m,
        min_wavelengths,
    })
}
