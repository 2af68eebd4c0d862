//! Grid evaluation of condition margins over a surface model, with
//! deterministic reduction to a global minimum and verdict.

use crate::lambda::LambdaBound;
use crate::margins;
use crate::Result;
use gaplab_geometry::{delta_log_kappa, ChartPoint, SurfaceModel};
use serde::{Deserialize, Serialize};

/// Which condition a check evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConditionKind {
    GeneralC { c: f64 },
    PinchedC0,
    PinchedChalf,
    SpectralDominance,
    TriaxialQuantity,
}

/// Echo of the evaluated condition: kind, barrier offset, eigenvalue bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionSpec {
    pub kind: ConditionKind,
    pub lambda_lb: Option<LambdaBound>,
    pub kappa_min: f64,
}

/// One margin sample, kept when the caller wants CSV output.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct MarginSample {
    pub point: ChartPoint,
    pub margin: f64,
}

/// Outcome of a grid check. The verdict is `min_margin > 0` with zero
/// tolerance: the conditions are open, so a grid minimum exactly at zero does
/// not certify them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionReport {
    pub spec: ConditionSpec,
    pub resolution: usize,
    pub min_margin: f64,
    pub argmin: ChartPoint,
    pub verdict: bool,
    /// Largest relative deviation between the dominance and the
    /// `C = −κ_min/2` general margins (identity check; dominance runs only).
    pub identity_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<MarginSample>>,
}

fn run_check<F>(
    model: &SurfaceModel,
    spec: ConditionSpec,
    resolution: usize,
    keep_samples: bool,
    margin_at: F,
) -> Result<ConditionReport>
where
    F: Fn(f64, f64) -> (f64, Option<f64>),
{
    let grid = model.sample_grid(resolution);
    let mut min_margin = f64::INFINITY;
    let mut argmin = grid[0];
    let mut identity_residual: Option<f64> = None;
    let mut samples = keep_samples.then(|| Vec::with_capacity(grid.len()));
    for pt in &grid {
        let dlk = delta_log_kappa(model, pt)?;
        let kappa = model.kappa(pt)?;
        let (margin, ident) = margin_at(dlk, kappa);
        if let Some(res) = ident {
            let cur = identity_residual.get_or_insert(0.0);
            if res > *cur {
                *cur = res;
            }
        }
        if margin < min_margin {
            min_margin = margin;
            argmin = *pt;
        }
        if let Some(s) = samples.as_mut() {
            s.push(MarginSample { point: *pt, margin });
        }
    }
    Ok(ConditionReport {
        spec,
        resolution,
        min_margin,
        argmin,
        verdict: min_margin > 0.0,
        identity_residual,
        samples,
    })
}

/// Evaluate the general condition margin at barrier offset `c` over the grid.
pub fn check_condition(
    model: &SurfaceModel,
    c: f64,
    lambda_lb: LambdaBound,
    resolution: usize,
    keep_samples: bool,
) -> Result<ConditionReport> {
    let spec = ConditionSpec {
        kind: ConditionKind::GeneralC { c },
        lambda_lb: Some(lambda_lb),
        kappa_min: model.kappa_min(),
    };
    run_check(model, spec, resolution, keep_samples, |dlk, kappa| {
        (margins::general_margin(dlk, kappa, lambda_lb.value, c), None)
    })
}

/// Both pinched-condition margins (`+6κ_min` and `+11κ_min` forms), paired
/// with the implied conclusions `Hess log u₁ ≤ −κ/2` and `≤ 0`.
pub fn check_pinched_conditions(
    model: &SurfaceModel,
    resolution: usize,
) -> Result<(ConditionReport, ConditionReport)> {
    let kmin = model.kappa_min();
    let spec0 = ConditionSpec { kind: ConditionKind::PinchedC0, lambda_lb: None, kappa_min: kmin };
    let spec1 = ConditionSpec { kind: ConditionKind::PinchedChalf, lambda_lb: None, kappa_min: kmin };
    let r0 = run_check(model, spec0, resolution, false, |dlk, kappa| {
        (margins::pinched_c0_margin(dlk, kappa, kmin), None)
    })?;
    let r1 = run_check(model, spec1, resolution, false, |dlk, kappa| {
        (margins::pinched_chalf_margin(dlk, kappa, kmin), None)
    })?;
    Ok((r0, r1))
}

/// Spectral-dominance margin; every grid point also cross-checks the
/// algebraic identity with the general margin at `C = −κ_min/2`.
pub fn check_spectral_dominance(
    model: &SurfaceModel,
    lambda_lb: LambdaBound,
    resolution: usize,
    keep_samples: bool,
) -> Result<ConditionReport> {
    let kmin = model.kappa_min();
    let spec = ConditionSpec {
        kind: ConditionKind::SpectralDominance,
        lambda_lb: Some(lambda_lb),
        kappa_min: kmin,
    };
    run_check(model, spec, resolution, keep_samples, |dlk, kappa| {
        let dom = margins::dominance_margin(dlk, kappa, kmin, lambda_lb.value);
        let gen = margins::general_margin(dlk, kappa, lambda_lb.value, -0.5 * kmin);
        let scale = dom.abs().max(gen.abs()).max(1e-300);
        (dom, Some((dom - gen).abs() / scale))
    })
}

/// The triaxial scan quantity `Δ log κ − 5κ + 12κ_min − κ_min²/κ`.
pub fn check_triaxial_quantity(
    model: &SurfaceModel,
    resolution: usize,
    keep_samples: bool,
) -> Result<ConditionReport> {
    let kmin = model.kappa_min();
    let spec = ConditionSpec {
        kind: ConditionKind::TriaxialQuantity,
        lambda_lb: None,
        kappa_min: kmin,
    };
    run_check(model, spec, resolution, keep_samples, |dlk, kappa| {
        (margins::triaxial_margin(dlk, kappa, kmin), None)
    })
}
