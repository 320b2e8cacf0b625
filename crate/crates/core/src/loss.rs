//! Worst-case loss evaluation and pairwise implementation comparison.
//!
//! The worst-case loss of an implementation is the sum of three terms:
//! propagation loss over the longest path, crossing loss over the worst
//! crossing count, and drop loss. The terms are always summed in that
//! order so identical inputs give bit-identical totals.

use crate::catalog::{self, CrossingModel, GridSpec, ImplSpec, TechParams};
use crate::error::ModelError;

/// Two totals closer than this are reported as a tie. The totals are exact
/// products and sums of user inputs, so anything nearer is rounding noise.
pub const TIE_TOLERANCE_DB: f64 = 1e-12;

/// One evaluated implementation: the structural quantities and the three
/// loss components they induce.
#[derive(Debug, Clone, PartialEq)]
pub struct LossBreakdown {
    pub d_max_cm: f64,
    pub n_crossing: u64,
    pub n_drop: u64,
    pub l_waveguide_db: f64,
    pub l_crossing_db: f64,
    pub l_drop_db: f64,
    pub l_total_db: f64,
    /// Model caveats that apply to this result (e.g. an uncalibrated
    /// layout-extra crossing term taken as zero).
    pub assumptions: Vec<String>,
}

/// Evaluate the worst-case loss of one implementation.
pub fn worst_case_loss(
    impl_spec: &ImplSpec,
    grid: &GridSpec,
    tech: &TechParams,
    model: &CrossingModel,
) -> Result<LossBreakdown, ModelError> {
    let resolution = model.resolve(impl_spec.topology(), impl_spec.layout(), grid.n())?;
    let d_max_cm = catalog::d_max(impl_spec, grid);
    let n_crossing = catalog::n_crossing(impl_spec, grid, model)?;
    let n_drop = catalog::n_drop(impl_spec);

    let l_waveguide_db = tech.p_propagation_db_per_cm() * d_max_cm;
    let l_crossing_db = tech.p_crossing_db() * n_crossing as f64;
    let l_drop_db = tech.p_drop_db() * n_drop as f64;
    let l_total_db = l_waveguide_db + l_crossing_db + l_drop_db;

    Ok(LossBreakdown {
        d_max_cm,
        n_crossing,
        n_drop,
        l_waveguide_db,
        l_crossing_db,
        l_drop_db,
        l_total_db,
        assumptions: resolution.assumption.into_iter().collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    ImplA,
    ImplB,
    Tie,
}

impl Winner {
    pub fn label(&self) -> &'static str {
        match self {
            Winner::ImplA => "a",
            Winner::ImplB => "b",
            Winner::Tie => "tie",
        }
    }
}

/// Result of comparing two implementations under the same conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub loss_a: LossBreakdown,
    pub loss_b: LossBreakdown,
    pub better: Winner,
    /// 100 * (worse - better) / worse; 0 for a tie.
    pub improvement_pct: f64,
}

/// Compare two implementations; the improvement is quoted relative to the
/// worse one.
pub fn compare(
    a: &ImplSpec,
    b: &ImplSpec,
    grid: &GridSpec,
    tech: &TechParams,
    model: &CrossingModel,
) -> Result<Comparison, ModelError> {
    let loss_a = worst_case_loss(a, grid, tech, model)?;
    let loss_b = worst_case_loss(b, grid, tech, model)?;
    let (better, improvement_pct) =
        if (loss_a.l_total_db - loss_b.l_total_db).abs() <= TIE_TOLERANCE_DB {
            (Winner::Tie, 0.0)
        } else if loss_a.l_total_db < loss_b.l_total_db {
            (
                Winner::ImplA,
                100.0 * (loss_b.l_total_db - loss_a.l_total_db) / loss_b.l_total_db,
            )
        } else {
            (
                Winner::ImplB,
                100.0 * (loss_a.l_total_db - loss_b.l_total_db) / loss_a.l_total_db,
            )
        };
    Ok(Comparison {
        loss_a,
        loss_b,
        better,
        improvement_pct,
    })
}
