//! Pointwise curvature quantities: `κ`, `∇κ`, `Δ log κ`, model-level extrema,
//! and the Gauss–Bonnet quadrature check.
//!
//! `Δ log κ` uses the exact chain-rule closed form on surfaces of revolution
//! (`f''''/f'' − (f'''/f'')² − f''/f + f'f'''/(f f'')` in arclength
//! derivatives) and the divergence-form finite-difference Laplace–Beltrami on
//! the owning chart everywhere else.

use crate::laplace;
use crate::metric::{Christoffel, Metric2};
use crate::profile::gauss_legendre;
use crate::surface::{self, ChartId, ChartPoint, ModelKind, ParametricKind, SurfaceModel};
use crate::{GeometryError, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Default finite-difference step for the generic `Δ log κ` path.
pub const DEFAULT_FD_STEP: f64 = 1e-3;

/// Gaussian curvature at a chart point.
pub fn gaussian_curvature(model: &SurfaceModel, pt: &ChartPoint) -> Result<f64> {
    model.kappa(pt)
}

/// `Δ log κ` at a chart point, using the model's preferred path.
pub fn delta_log_kappa(model: &SurfaceModel, pt: &ChartPoint) -> Result<f64> {
    let kappa = model.kappa(pt)?;
    if !(kappa > 0.0) {
        return Err(GeometryError::NonPositiveCurvature { kappa, u: pt.u, v: pt.v });
    }
    match &model.kind {
        ModelKind::Sphere { .. } | ModelKind::Parametric(ParametricKind::SpherePolar { .. }) => {
            Ok(0.0)
        }
        ModelKind::Revolution { profile } => {
            let d = profile.radial_derivs(pt.u)?;
            if d.f2 == 0.0 {
                return Err(GeometryError::NonPositiveCurvature { kappa: 0.0, u: pt.u, v: pt.v });
            }
            Ok(d.f4 / d.f2 - (d.f3 / d.f2) * (d.f3 / d.f2) - d.f2 / d.f + d.f1 * d.f3 / (d.f * d.f2))
        }
        ModelKind::Triaxial { .. } | ModelKind::Parametric(ParametricKind::ConformalP2 { .. }) => {
            delta_log_kappa_fd(model, pt, DEFAULT_FD_STEP)
        }
    }
}

/// Generic chart finite-difference path for `Δ log κ` (divergence form with
/// Richardson extrapolation), usable on every model. Triaxial points are
/// re-expressed in their owning chart first.
pub fn delta_log_kappa_fd(model: &SurfaceModel, pt: &ChartPoint, h: f64) -> Result<f64> {
    let pt = match &model.kind {
        ModelKind::Triaxial { .. } => model.owning_point(model.position(pt)?),
        _ => *pt,
    };
    let field = |u: f64, v: f64| -> f64 {
        model
            .kappa(&ChartPoint { chart: pt.chart, u, v })
            .map(|k| k.ln())
            .unwrap_or(f64::NAN)
    };
    laplace::laplace_beltrami_fd_richardson(model, pt.chart, &field, pt.u, pt.v, h)
}

/// Pointwise curvature bundle consumed by condition checks and reports.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurvatureSample {
    pub point: ChartPoint,
    pub metric: Metric2,
    pub christoffel: Christoffel,
    pub kappa: f64,
    /// chart partials (∂κ/∂u, ∂κ/∂v)
    pub kappa_grad: (f64, f64),
    pub delta_log_kappa: f64,
    pub kappa_min: f64,
    pub kappa_max: f64,
}

pub fn curvature_sample(model: &SurfaceModel, pt: &ChartPoint) -> Result<CurvatureSample> {
    let metric = model.metric(pt)?;
    if !metric.is_spd() {
        return Err(GeometryError::InvalidModel(format!(
            "metric not positive definite at ({}, {})",
            pt.u, pt.v
        )));
    }
    Ok(CurvatureSample {
        point: *pt,
        metric,
        christoffel: model.christoffel(pt)?,
        kappa: model.kappa(pt)?,
        kappa_grad: model.kappa_grad(pt)?,
        delta_log_kappa: delta_log_kappa(model, pt)?,
        kappa_min: model.kappa_min(),
        kappa_max: model.kappa_max(),
    })
}

/// Model-level curvature extrema found by grid search with one local
/// quadratic refinement per extremum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvatureExtrema {
    pub kappa_min: f64,
    pub kappa_max: f64,
    pub argmin: ChartPoint,
    pub argmax: ChartPoint,
    pub resolution: usize,
}

impl Default for CurvatureExtrema {
    fn default() -> Self {
        Self {
            kappa_min: f64::NAN,
            kappa_max: f64::NAN,
            argmin: ChartPoint::main(0.0, 0.0),
            argmax: ChartPoint::main(0.0, 0.0),
            resolution: 0,
        }
    }
}

/// Refine a grid extremum with the parabola through three consecutive
/// samples; returns (offset in grid steps, refined value).
fn quadratic_refine(ym: f64, y0: f64, yp: f64, minimizing: bool) -> (f64, f64) {
    let curv = ym - 2.0 * y0 + yp;
    if (minimizing && curv <= 0.0) || (!minimizing && curv >= 0.0) || curv == 0.0 {
        return (0.0, y0);
    }
    let t = 0.5 * (ym - yp) / curv;
    let t = t.clamp(-1.0, 1.0);
    (t, y0 + 0.5 * t * (yp - ym) + 0.5 * t * t * curv)
}

pub fn curvature_extrema(model: &SurfaceModel, resolution: usize) -> Result<CurvatureExtrema> {
    let res = resolution.max(64);
    match &model.kind {
        ModelKind::Sphere { radius } => {
            let k = 1.0 / (radius * radius);
            Ok(CurvatureExtrema {
                kappa_min: k,
                kappa_max: k,
                argmin: ChartPoint::main(0.5 * PI, 0.0),
                argmax: ChartPoint::main(0.5 * PI, 0.0),
                resolution: res,
            })
        }
        ModelKind::Parametric(ParametricKind::SpherePolar { radius }) => {
            let k = 1.0 / (radius * radius);
            Ok(CurvatureExtrema {
                kappa_min: k,
                kappa_max: k,
                argmin: ChartPoint::main(0.5 * PI, 0.0),
                argmax: ChartPoint::main(0.5 * PI, 0.0),
                resolution: res,
            })
        }
        ModelKind::Revolution { profile } => {
            let f = |x: f64| profile.kappa(x);
            Ok(extrema_1d(&f, profile.x_lo(), profile.x_hi(), res))
        }
        ModelKind::Parametric(ParametricKind::ConformalP2 { amplitude }) => {
            let a = *amplitude;
            let f = |theta: f64| conformal_kappa_closed(a, theta);
            Ok(extrema_1d(&f, 0.0, PI, res))
        }
        ModelKind::Triaxial { a, b, c } => {
            let axes = [*a, *b, *c];
            let chart = model.triaxial_chart(ChartId::Main).unwrap();
            let f = |u: f64, v: f64| surface::triaxial_kappa(axes, chart.position(u, v));
            let mut best_min = (f64::INFINITY, 0usize, 0usize);
            let mut best_max = (f64::NEG_INFINITY, 0usize, 0usize);
            let nu = res + 1;
            let nv = res;
            for i in 0..nu {
                let u = PI * i as f64 / res as f64;
                for j in 0..nv {
                    let v = 2.0 * PI * j as f64 / nv as f64;
                    let k = f(u, v);
                    if k < best_min.0 {
                        best_min = (k, i, j);
                    }
                    if k > best_max.0 {
                        best_max = (k, i, j);
                    }
                }
            }
            let refine = |val: f64, i: usize, j: usize, minimizing: bool| -> (f64, f64, f64) {
                let du = PI / res as f64;
                let dv = 2.0 * PI / nv as f64;
                let u = du * i as f64;
                let v = dv * j as f64;
                let mut out_val = val;
                let mut out_u = u;
                let out_v;
                if i > 0 && i < res {
                    let (t, refv) = quadratic_refine(f(u - du, v), val, f(u + du, v), minimizing);
                    out_u = u + t * du;
                    if (minimizing && refv < out_val) || (!minimizing && refv > out_val) {
                        out_val = refv;
                    }
                }
                let vm = if j == 0 { 2.0 * PI - dv } else { v - dv };
                let (tv, refv) = quadratic_refine(f(u, vm), val, f(u, v + dv), minimizing);
                out_v = v + tv * dv;
                if (minimizing && refv < out_val) || (!minimizing && refv > out_val) {
                    out_val = refv;
                }
                (out_val, out_u, out_v)
            };
            let (kmin, umin, vmin) = refine(best_min.0, best_min.1, best_min.2, true);
            let (kmax, umax, vmax) = refine(best_max.0, best_max.1, best_max.2, false);
            Ok(CurvatureExtrema {
                kappa_min: kmin,
                kappa_max: kmax,
                argmin: ChartPoint::main(umin, vmin),
                argmax: ChartPoint::main(umax, vmax),
                resolution: res,
            })
        }
    }
}

fn extrema_1d(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, res: usize) -> CurvatureExtrema {
    let step = (hi - lo) / res as f64;
    let mut best_min = (f64::INFINITY, 0usize);
    let mut best_max = (f64::NEG_INFINITY, 0usize);
    for i in 0..=res {
        let k = f(lo + step * i as f64);
        if k < best_min.0 {
            best_min = (k, i);
        }
        if k > best_max.0 {
            best_max = (k, i);
        }
    }
    let refine = |val: f64, i: usize, minimizing: bool| -> (f64, f64) {
        let x = lo + step * i as f64;
        if i == 0 || i == res {
            return (val, x);
        }
        let (t, refv) = quadratic_refine(f(x - step), val, f(x + step), minimizing);
        (refv, x + t * step)
    };
    let (kmin, xmin) = refine(best_min.0, best_min.1, true);
    let (kmax, xmax) = refine(best_max.0, best_max.1, false);
    CurvatureExtrema {
        kappa_min: kmin,
        kappa_max: kmax,
        argmin: ChartPoint::main(xmin, 0.0),
        argmax: ChartPoint::main(xmax, 0.0),
        resolution: res,
    }
}

fn conformal_kappa_closed(a: f64, theta: f64) -> f64 {
    // pole limit: cot θ · φ' → φ''
    if theta < 1e-7 || theta > PI - 1e-7 {
        let (phi, _, d2phi, _) = surface::conformal_p2_phi(a, if theta < 1.0 { 0.0 } else { PI });
        return (-2.0 * phi).exp() * (1.0 - 2.0 * d2phi);
    }
    surface::conformal_p2_kappa(a, theta).0
}

/// `∫ κ dA` over the closed model by quadrature; equals `4π` by Gauss–Bonnet.
pub fn gauss_bonnet_integral(model: &SurfaceModel) -> f64 {
    match &model.kind {
        ModelKind::Sphere { radius } => {
            let r2 = radius * radius;
            2.0 * PI * gauss_legendre(|t| t.sin() * r2 / r2, 0.0, PI, 128)
        }
        ModelKind::Parametric(ParametricKind::SpherePolar { radius }) => {
            let r2 = radius * radius;
            2.0 * PI * gauss_legendre(|t| t.sin() * r2 / r2, 0.0, PI, 128)
        }
        ModelKind::Parametric(ParametricKind::ConformalP2 { amplitude }) => {
            let a = *amplitude;
            2.0 * PI
                * gauss_legendre(
                    |t| {
                        let (phi, _, _, _) = surface::conformal_p2_phi(a, t);
                        conformal_kappa_closed(a, t) * (2.0 * phi).exp() * t.sin()
                    },
                    0.0,
                    PI,
                    256,
                )
        }
        ModelKind::Revolution { profile } => {
            let e2 = profile.eps * profile.eps;
            2.0 * PI
                * gauss_legendre(
                    |x| {
                        // F·s = sqrt(F² + x²/eps⁴), smooth up to the poles
                        let w2 = profile.scale * profile.scale - x * x / e2;
                        let fs = (w2.max(0.0) + x * x / (e2 * e2)).sqrt();
                        profile.kappa(x) * fs
                    },
                    profile.x_lo(),
                    profile.x_hi(),
                    512,
                )
        }
        ModelKind::Triaxial { a, b, c } => {
            let axes = [*a, *b, *c];
            let chart = model.triaxial_chart(ChartId::Main).unwrap();
            let nv = 512usize;
            let dv = 2.0 * PI / nv as f64;
            gauss_legendre(
                |u| {
                    let mut ring = 0.0;
                    for j in 0..nv {
                        let v = dv * j as f64;
                        let jet = chart.metric_jet(u, v);
                        ring += surface::triaxial_kappa(axes, chart.position(u, v)) * jet.m.sqrt_det();
                    }
                    ring * dv
                },
                0.0,
                PI,
                256,
            )
        }
    }
}
