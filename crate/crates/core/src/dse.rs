//! Design-space exploration: loss sweeps over array size or pitch, and
//! analytic break-even frontiers between implementation pairs.
//!
//! A frontier exploits the fact that the worst-case loss is linear in the
//! technology coefficients: at fixed (n, pitch, p_drop) the equal-loss
//! locus of two implementations is a straight line in the
//! (p_crossing, p_propagation) plane. Frontiers are solved in closed form,
//! never by root finding.

use crate::catalog::{self, CrossingModel, GridSpec, ImplSpec, TechParams};
use crate::error::ModelError;
use crate::loss::{self, LossBreakdown};

/// Loss at a point closer than this to the frontier line counts as on the
/// line.
pub const ON_LINE_TOLERANCE_DB: f64 = 1e-9;

/// What a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    GridSide,
    PitchCm,
}

impl SweepAxis {
    pub fn label(&self) -> &'static str {
        match self {
            SweepAxis::GridSide => "n",
            SweepAxis::PitchCm => "pitch",
        }
    }
}

/// How to react to a crossing model that has no answer at a swept point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Lenient,
}

impl Strictness {
    pub fn label(&self) -> &'static str {
        match self {
            Strictness::Strict => "strict",
            Strictness::Lenient => "lenient",
        }
    }
}

/// One axis value with the loss breakdown of every swept implementation,
/// aligned with `SweepResult::impls`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub axis_value: f64,
    pub breakdowns: Vec<LossBreakdown>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub axis: SweepAxis,
    pub impls: Vec<ImplSpec>,
    pub points: Vec<SweepPoint>,
}

fn evaluate_point(
    impl_spec: &ImplSpec,
    grid: &GridSpec,
    tech: &TechParams,
    model: &CrossingModel,
    strictness: Strictness,
) -> Result<LossBreakdown, ModelError> {
    match loss::worst_case_loss(impl_spec, grid, tech, model) {
        Ok(breakdown) => Ok(breakdown),
        Err(ModelError::UncalibratedCrossing { .. }) if strictness == Strictness::Lenient => {
            let mut breakdown =
                loss::worst_case_loss(impl_spec, grid, tech, &CrossingModel::ZeroExtra)?;
            breakdown.assumptions.push(format!(
                "{} at n={}: {} model is uncalibrated here; zero-extra substituted",
                impl_spec.name(),
                grid.n(),
                model.label()
            ));
            Ok(breakdown)
        }
        Err(other) => Err(other),
    }
}

/// Sweep the array side at a fixed die area; the pitch shrinks as n grows.
pub fn sweep_n(
    die_area_cm2: f64,
    n_values: &[u64],
    impls: &[ImplSpec],
    tech: &TechParams,
    model: &CrossingModel,
    strictness: Strictness,
) -> Result<SweepResult, ModelError> {
    if n_values.is_empty() {
        return Err(ModelError::EmptySweep("axis value"));
    }
    if impls.is_empty() {
        return Err(ModelError::EmptySweep("implementation"));
    }
    let mut values = n_values.to_vec();
    values.sort_unstable();
    values.dedup();

    let mut points = Vec::with_capacity(values.len());
    for &n in &values {
        let grid = GridSpec::from_die_area(die_area_cm2, n)?;
        let mut breakdowns = Vec::with_capacity(impls.len());
        for imp in impls {
            breakdowns.push(evaluate_point(imp, &grid, tech, model, strictness)?);
        }
        points.push(SweepPoint {
            axis_value: n as f64,
            breakdowns,
        });
    }
    Ok(SweepResult {
        axis: SweepAxis::GridSide,
        impls: impls.to_vec(),
        points,
    })
}

/// Sweep the interface pitch at a fixed array side.
pub fn sweep_pitch(
    n: u64,
    pitch_values_cm: &[f64],
    impls: &[ImplSpec],
    tech: &TechParams,
    model: &CrossingModel,
    strictness: Strictness,
) -> Result<SweepResult, ModelError> {
    if pitch_values_cm.is_empty() {
        return Err(ModelError::EmptySweep("axis value"));
    }
    if impls.is_empty() {
        return Err(ModelError::EmptySweep("implementation"));
    }
    let mut values = pitch_values_cm.to_vec();
    for &p in &values {
        if !p.is_finite() || p <= 0.0 {
            return Err(ModelError::InvalidPitch(p));
        }
    }
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite pitches"));
    values.dedup();

    let mut points = Vec::with_capacity(values.len());
    for &pitch in &values {
        let grid = GridSpec::new(n, pitch)?;
        let mut breakdowns = Vec::with_capacity(impls.len());
        for imp in impls {
            breakdowns.push(evaluate_point(imp, &grid, tech, model, strictness)?);
        }
        points.push(SweepPoint {
            axis_value: pitch,
            breakdowns,
        });
    }
    Ok(SweepResult {
        axis: SweepAxis::PitchCm,
        impls: impls.to_vec(),
        points,
    })
}

/// The equal-loss line between two implementations in the
/// (p_crossing, p_propagation) plane:
/// p_propagation = slope * p_crossing + intercept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontierLine {
    pub slope: f64,
    pub intercept: f64,
    /// The implementation with the lower loss below the line.
    pub wins_below: Side,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    ImplA,
    ImplB,
    OnLine,
}

impl Side {
    pub fn label(&self) -> &'static str {
        match self {
            Side::ImplA => "a",
            Side::ImplB => "b",
            Side::OnLine => "on-line",
        }
    }
}

/// Break-even frontier between two implementations at fixed n, pitch, and
/// drop loss.
#[derive(Debug, Clone, PartialEq)]
pub struct Frontier {
    pub impl_a: ImplSpec,
    pub impl_b: ImplSpec,
    pub n: u64,
    pub pitch_cm: f64,
    pub p_drop_db: f64,
    pub delta_d_max_cm: f64,
    pub delta_n_crossing: i64,
    pub delta_n_drop: i64,
    /// None when the comparison does not depend on p_propagation
    /// (equal worst-case distances) and no line of the stated form exists.
    pub line: Option<FrontierLine>,
}

impl Frontier {
    pub fn is_degenerate(&self) -> bool {
        self.line.is_none()
    }

    /// Signed loss difference L_a - L_b at a technology point, using the
    /// frontier's own linear form.
    fn loss_delta(&self, tech: &TechParams) -> f64 {
        self.delta_d_max_cm * tech.p_propagation_db_per_cm()
            + self.delta_n_crossing as f64 * tech.p_crossing_db()
            + self.delta_n_drop as f64 * self.p_drop_db
    }
}

/// Solve the break-even line analytically from the loss linearity:
/// slope = -dN_crossing/dD_max, intercept = -dN_drop * p_drop / dD_max.
pub fn breakeven_frontier(
    impl_a: &ImplSpec,
    impl_b: &ImplSpec,
    n: u64,
    pitch_cm: f64,
    p_drop_db: f64,
    model: &CrossingModel,
) -> Result<Frontier, ModelError> {
    if !p_drop_db.is_finite() || p_drop_db < 0.0 {
        return Err(ModelError::InvalidLossCoefficient {
            name: "p_drop",
            value: p_drop_db,
        });
    }
    let grid = GridSpec::new(n, pitch_cm)?;
    let d_a = catalog::d_max(impl_a, &grid);
    let d_b = catalog::d_max(impl_b, &grid);
    let c_a = catalog::n_crossing(impl_a, &grid, model)? as i64;
    let c_b = catalog::n_crossing(impl_b, &grid, model)? as i64;
    let r_a = catalog::n_drop(impl_a) as i64;
    let r_b = catalog::n_drop(impl_b) as i64;

    let delta_d_max_cm = d_a - d_b;
    let delta_n_crossing = c_a - c_b;
    let delta_n_drop = r_a - r_b;

    let line = if delta_d_max_cm == 0.0 {
        None
    } else {
        // Below the line p_propagation is smaller, so the sign of
        // delta_d_max decides who wins there.
        let wins_below = if delta_d_max_cm > 0.0 {
            Side::ImplA
        } else {
            Side::ImplB
        };
        Some(FrontierLine {
            slope: -(delta_n_crossing as f64) / delta_d_max_cm,
            intercept: -(delta_n_drop as f64) * p_drop_db / delta_d_max_cm,
            wins_below,
        })
    };

    Ok(Frontier {
        impl_a: *impl_a,
        impl_b: *impl_b,
        n,
        pitch_cm,
        p_drop_db,
        delta_d_max_cm,
        delta_n_crossing,
        delta_n_drop,
        line,
    })
}

/// Which side of the frontier a technology point falls on. The verdict
/// matches a direct worst-case-loss comparison by construction.
pub fn classify(frontier: &Frontier, tech: &TechParams) -> Result<Side, ModelError> {
    if frontier.is_degenerate() {
        return Err(ModelError::DegenerateFrontier);
    }
    if tech.p_drop_db() != frontier.p_drop_db {
        return Err(ModelError::PdropMismatch {
            tech: tech.p_drop_db(),
            frontier: frontier.p_drop_db,
        });
    }
    let delta = frontier.loss_delta(tech);
    if delta.abs() <= ON_LINE_TOLERANCE_DB {
        Ok(Side::OnLine)
    } else if delta < 0.0 {
        Ok(Side::ImplA)
    } else {
        Ok(Side::ImplB)
    }
}
