//! Surface models: round sphere, ellipsoid of revolution, triaxial ellipsoid
//! (two overlapping polar charts), and named parametric charts.
//!
//! Construction validates positive curvature by sampling, then caches the
//! curvature extrema (resolution 512 grid + local quadratic refinement) and
//! the Gauss–Bonnet residual, since every condition check reuses them.

use crate::curvature::{self, CurvatureExtrema};
use crate::metric::{Christoffel, Metric2, MetricJet};
use crate::profile::{ProfileCurve, RadialMetric};
use crate::{GeometryError, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Which chart a parameter pair refers to. `Main` is the single chart for
/// spheres, revolution surfaces, and parametric models; triaxial ellipsoids
/// add `Alt`, a polar chart about a different axis covering the `Main` poles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChartId {
    Main,
    Alt,
}

/// A chart point `(u, v)` tagged with its chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChartPoint {
    pub chart: ChartId,
    pub u: f64,
    pub v: f64,
}

impl ChartPoint {
    pub fn main(u: f64, v: f64) -> Self {
        Self { chart: ChartId::Main, u, v }
    }
}

/// Named analytic parametric charts exercising the generic operator paths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum ParametricKind {
    /// Round sphere in polar coordinates, metric `R²(dθ² + sin²θ dφ²)`.
    SpherePolar { radius: f64 },
    /// Conformal perturbation `e^{2φ}(dθ² + sin²θ dφ²)` of the unit sphere
    /// with `φ = amplitude · P₂(cos θ)`.
    ConformalP2 { amplitude: f64 },
}

/// Serializable surface definition; see `SurfaceModel::from_spec`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceSpec {
    Sphere {
        radius: f64,
    },
    RevolutionEllipsoid {
        eps: f64,
        #[serde(default = "default_scale")]
        scale: f64,
    },
    /// Squared semi-axes `a ≤ b ≤ c` of `x²/a + y²/b + z²/c = 1`.
    Triaxial {
        a: f64,
        b: f64,
        c: f64,
    },
    Parametric(ParametricKind),
}

fn default_scale() -> f64 {
    1.0
}

/// Polar-type chart of an ellipsoid: `X = (ax0·cos u, ax1·sin u·cos v,
/// ax2·sin u·sin v)` with the three slots permuted into world axes by `perm`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PolarChart {
    pub ax: [f64; 3],
    pub perm: [usize; 3],
}

impl PolarChart {
    pub fn position(&self, u: f64, v: f64) -> [f64; 3] {
        let (su, cu) = u.sin_cos();
        let (sv, cv) = v.sin_cos();
        let p = [self.ax[0] * cu, self.ax[1] * su * cv, self.ax[2] * su * sv];
        let mut out = [0.0; 3];
        for i in 0..3 {
            out[self.perm[i]] = p[i];
        }
        out
    }

    pub fn metric_jet(&self, u: f64, v: f64) -> MetricJet {
        let (su, cu) = u.sin_cos();
        let (sv, cv) = v.sin_cos();
        let (a0, a1, a2) = (self.ax[0] * self.ax[0], self.ax[1] * self.ax[1], self.ax[2] * self.ax[2]);
        let p = a1 * cv * cv + a2 * sv * sv;
        let q = a1 * sv * sv + a2 * cv * cv;
        let d = a2 - a1;
        let e = a0 * su * su + p * cu * cu;
        let f = su * cu * sv * cv * d;
        let g = su * su * q;
        let two_sc = 2.0 * su * cu;
        let two_svcv = 2.0 * sv * cv;
        MetricJet {
            m: Metric2::new(e, f, g),
            du: Metric2::new(two_sc * (a0 - p), (cu * cu - su * su) * sv * cv * d, two_sc * q),
            dv: Metric2::new(
                cu * cu * two_svcv * d,
                su * cu * (cv * cv - sv * sv) * d,
                su * su * two_svcv * (a1 - a2),
            ),
        }
    }

    /// Inverse chart: world position to `(u, v)`, `u ∈ [0, π]`, `v ∈ [0, 2π)`.
    pub fn coords_of(&self, pos: [f64; 3]) -> (f64, f64) {
        let m0 = pos[self.perm[0]] / self.ax[0];
        let m1 = pos[self.perm[1]] / self.ax[1];
        let m2 = pos[self.perm[2]] / self.ax[2];
        let u = m0.clamp(-1.0, 1.0).acos();
        let mut v = m2.atan2(m1);
        if v < 0.0 {
            v += 2.0 * PI;
        }
        (u, v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub(crate) enum ModelKind {
    Sphere { radius: f64 },
    Revolution { profile: ProfileCurve },
    Triaxial { a: f64, b: f64, c: f64 },
    Parametric(ParametricKind),
}

/// A validated, positively curved closed surface with cached curvature
/// extrema and Gauss–Bonnet residual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub(crate) kind: ModelKind,
    extrema: CurvatureExtrema,
    gauss_bonnet_residual: f64,
    spec: SurfaceSpec,
}

/// Triaxial chart ownership: points with |on-axis component| above this
/// fraction of the semi-axis are evaluated in the other chart.
const CHART_SWITCH: f64 = 0.8;

impl SurfaceModel {
    pub fn sphere(radius: f64) -> Result<Self> {
        Self::from_spec(&SurfaceSpec::Sphere { radius })
    }

    pub fn revolution_ellipsoid(eps: f64) -> Result<Self> {
        Self::from_spec(&SurfaceSpec::RevolutionEllipsoid { eps, scale: 1.0 })
    }

    pub fn revolution_ellipsoid_scaled(eps: f64, scale: f64) -> Result<Self> {
        Self::from_spec(&SurfaceSpec::RevolutionEllipsoid { eps, scale })
    }

    pub fn triaxial(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_spec(&SurfaceSpec::Triaxial { a, b, c })
    }

    pub fn parametric(kind: ParametricKind) -> Result<Self> {
        Self::from_spec(&SurfaceSpec::Parametric(kind))
    }

    pub fn from_spec(spec: &SurfaceSpec) -> Result<Self> {
        let kind = match *spec {
            SurfaceSpec::Sphere { radius } => {
                if !(radius > 0.0) {
                    return Err(GeometryError::InvalidModel(format!("sphere radius {radius} must be > 0")));
                }
                ModelKind::Sphere { radius }
            }
            SurfaceSpec::RevolutionEllipsoid { eps, scale } => {
                ModelKind::Revolution { profile: ProfileCurve::half_ellipse_scaled(eps, scale)? }
            }
            SurfaceSpec::Triaxial { a, b, c } => {
                if !(a > 0.0 && b > 0.0 && c > 0.0) {
                    return Err(GeometryError::InvalidModel("triaxial axes must be positive".into()));
                }
                if !(a <= b && b <= c) {
                    return Err(GeometryError::InvalidModel(format!(
                        "triaxial axes must satisfy a ≤ b ≤ c, got ({a}, {b}, {c})"
                    )));
                }
                ModelKind::Triaxial { a, b, c }
            }
            SurfaceSpec::Parametric(p) => {
                match p {
                    ParametricKind::SpherePolar { radius } if !(radius > 0.0) => {
                        return Err(GeometryError::InvalidModel("sphere radius must be > 0".into()));
                    }
                    _ => {}
                }
                ModelKind::Parametric(p)
            }
        };
        let mut model = SurfaceModel {
            kind,
            extrema: CurvatureExtrema::default(),
            gauss_bonnet_residual: f64::NAN,
            spec: *spec,
        };
        // positivity by sampling: a violation is a model-construction error
        for pt in model.sample_grid(64) {
            let k = model.kappa(&pt)?;
            if !(k > 0.0) {
                return Err(GeometryError::NonPositiveCurvature { kappa: k, u: pt.u, v: pt.v });
            }
        }
        model.extrema = curvature::curvature_extrema(&model, 512)?;
        model.gauss_bonnet_residual = curvature::gauss_bonnet_integral(&model) / (4.0 * PI) - 1.0;
        Ok(model)
    }

    pub fn spec(&self) -> &SurfaceSpec {
        &self.spec
    }

    /// Cached curvature extrema (resolution 512).
    pub fn kappa_extrema(&self) -> &CurvatureExtrema {
        &self.extrema
    }

    pub fn kappa_min(&self) -> f64 {
        self.extrema.kappa_min
    }

    pub fn kappa_max(&self) -> f64 {
        self.extrema.kappa_max
    }

    /// Relative Gauss–Bonnet residual `∫κ dA / 4π − 1`, cached at build.
    pub fn gauss_bonnet_residual(&self) -> f64 {
        self.gauss_bonnet_residual
    }

    /// The radial view `dr² + f(r)²dθ²` for rotationally symmetric models.
    pub fn radial_metric(&self) -> Option<RadialMetric> {
        match &self.kind {
            ModelKind::Sphere { radius } => Some(RadialMetric::Sphere { radius: *radius }),
            ModelKind::Revolution { profile } => Some(RadialMetric::Profile(*profile)),
            _ => None,
        }
    }

    /// Chart parameter rectangle and whether `v` wraps periodically.
    pub fn chart_domain(&self, _chart: ChartId) -> ((f64, f64), (f64, f64), bool) {
        match &self.kind {
            ModelKind::Sphere { .. } | ModelKind::Parametric(_) => ((0.0, PI), (0.0, 2.0 * PI), true),
            ModelKind::Revolution { profile } => {
                ((profile.x_lo(), profile.x_hi()), (0.0, 2.0 * PI), true)
            }
            ModelKind::Triaxial { .. } => ((0.0, PI), (0.0, 2.0 * PI), true),
        }
    }

    pub(crate) fn triaxial_chart(&self, chart: ChartId) -> Option<PolarChart> {
        match self.kind {
            ModelKind::Triaxial { a, b, c } => {
                let (sa, sb, sc) = (a.sqrt(), b.sqrt(), c.sqrt());
                Some(match chart {
                    // polar axis along z (the longest axis)
                    ChartId::Main => PolarChart { ax: [sc, sa, sb], perm: [2, 0, 1] },
                    // polar axis along x (the shortest axis)
                    ChartId::Alt => PolarChart { ax: [sa, sb, sc], perm: [0, 1, 2] },
                })
            }
            _ => None,
        }
    }

    fn in_chart(&self, pt: &ChartPoint) -> bool {
        let ((ulo, uhi), _, _) = self.chart_domain(pt.chart);
        pt.u >= ulo && pt.u <= uhi && pt.u.is_finite() && pt.v.is_finite()
    }

    /// World position of a chart point (triaxial, sphere, revolution).
    /// Parametric charts are abstract metrics; they use the round embedding.
    pub fn position(&self, pt: &ChartPoint) -> Result<[f64; 3]> {
        if !self.in_chart(pt) {
            return Err(GeometryError::PointOutsideChart { u: pt.u, v: pt.v });
        }
        Ok(match &self.kind {
            ModelKind::Sphere { radius } => {
                let (su, cu) = pt.u.sin_cos();
                let (sv, cv) = pt.v.sin_cos();
                [radius * su * cv, radius * su * sv, radius * cu]
            }
            ModelKind::Parametric(_) => {
                let (su, cu) = pt.u.sin_cos();
                let (sv, cv) = pt.v.sin_cos();
                [su * cv, su * sv, cu]
            }
            ModelKind::Revolution { profile } => {
                let f = profile.graph_derivs(pt.u).map(|d| d[0]).unwrap_or(0.0);
                let (sv, cv) = pt.v.sin_cos();
                [pt.u, f * cv, f * sv]
            }
            ModelKind::Triaxial { .. } => {
                let chart = self.triaxial_chart(pt.chart).unwrap();
                chart.position(pt.u, pt.v)
            }
        })
    }

    /// Express a world position in the chart that owns it: the chart whose
    /// poles it is farthest from. Identity for single-chart models.
    pub fn owning_point(&self, pos: [f64; 3]) -> ChartPoint {
        match self.kind {
            ModelKind::Triaxial { c, .. } => {
                let main = self.triaxial_chart(ChartId::Main).unwrap();
                let zfrac = (pos[2] / c.sqrt()).abs();
                if zfrac <= CHART_SWITCH {
                    let (u, v) = main.coords_of(pos);
                    ChartPoint { chart: ChartId::Main, u, v }
                } else {
                    let alt = self.triaxial_chart(ChartId::Alt).unwrap();
                    let (u, v) = alt.coords_of(pos);
                    ChartPoint { chart: ChartId::Alt, u, v }
                }
            }
            _ => {
                // single-chart models never call this path
                ChartPoint::main(0.0, 0.0)
            }
        }
    }

    /// First fundamental form with chart derivatives.
    pub fn metric_jet(&self, pt: &ChartPoint) -> Result<MetricJet> {
        if !self.in_chart(pt) {
            return Err(GeometryError::PointOutsideChart { u: pt.u, v: pt.v });
        }
        Ok(match &self.kind {
            ModelKind::Sphere { radius } => {
                let r2 = radius * radius;
                let (su, cu) = pt.u.sin_cos();
                MetricJet {
                    m: Metric2::new(r2, 0.0, r2 * su * su),
                    du: Metric2::new(0.0, 0.0, 2.0 * r2 * su * cu),
                    dv: Metric2::new(0.0, 0.0, 0.0),
                }
            }
            ModelKind::Parametric(ParametricKind::SpherePolar { radius }) => {
                let r2 = radius * radius;
                let (su, cu) = pt.u.sin_cos();
                MetricJet {
                    m: Metric2::new(r2, 0.0, r2 * su * su),
                    du: Metric2::new(0.0, 0.0, 2.0 * r2 * su * cu),
                    dv: Metric2::new(0.0, 0.0, 0.0),
                }
            }
            ModelKind::Parametric(ParametricKind::ConformalP2 { amplitude }) => {
                let (su, cu) = pt.u.sin_cos();
                let (phi, dphi, _, _) = conformal_p2_phi(*amplitude, pt.u);
                let w = (2.0 * phi).exp();
                let e = w;
                let g = w * su * su;
                MetricJet {
                    m: Metric2::new(e, 0.0, g),
                    du: Metric2::new(
                        2.0 * dphi * w,
                        0.0,
                        w * (2.0 * dphi * su * su + 2.0 * su * cu),
                    ),
                    dv: Metric2::new(0.0, 0.0, 0.0),
                }
            }
            ModelKind::Revolution { profile } => {
                let d = profile.graph_derivs(pt.u)?;
                let (f, f1, f2) = (d[0], d[1], d[2]);
                let s2 = 1.0 + f1 * f1;
                MetricJet {
                    m: Metric2::new(s2, 0.0, f * f),
                    du: Metric2::new(2.0 * f1 * f2, 0.0, 2.0 * f * f1),
                    dv: Metric2::new(0.0, 0.0, 0.0),
                }
            }
            ModelKind::Triaxial { .. } => {
                let chart = self.triaxial_chart(pt.chart).unwrap();
                chart.metric_jet(pt.u, pt.v)
            }
        })
    }

    pub fn metric(&self, pt: &ChartPoint) -> Result<Metric2> {
        Ok(self.metric_jet(pt)?.m)
    }

    pub fn christoffel(&self, pt: &ChartPoint) -> Result<Christoffel> {
        Ok(Christoffel::from_jet(&self.metric_jet(pt)?))
    }

    /// Gaussian curvature at a chart point (analytic path for every model).
    pub fn kappa(&self, pt: &ChartPoint) -> Result<f64> {
        if !self.in_chart(pt) {
            return Err(GeometryError::PointOutsideChart { u: pt.u, v: pt.v });
        }
        Ok(match &self.kind {
            ModelKind::Sphere { radius } => 1.0 / (radius * radius),
            ModelKind::Parametric(ParametricKind::SpherePolar { radius }) => 1.0 / (radius * radius),
            ModelKind::Parametric(ParametricKind::ConformalP2 { amplitude }) => {
                conformal_p2_kappa(*amplitude, pt.u).0
            }
            ModelKind::Revolution { profile } => profile.kappa(pt.u),
            ModelKind::Triaxial { a, b, c } => {
                let pos = self.position(pt)?;
                triaxial_kappa([*a, *b, *c], pos)
            }
        })
    }

    /// Chart partial derivatives `(∂κ/∂u, ∂κ/∂v)`.
    pub fn kappa_grad(&self, pt: &ChartPoint) -> Result<(f64, f64)> {
        Ok(match &self.kind {
            ModelKind::Sphere { .. } | ModelKind::Parametric(ParametricKind::SpherePolar { .. }) => {
                (0.0, 0.0)
            }
            ModelKind::Parametric(ParametricKind::ConformalP2 { amplitude }) => {
                (conformal_p2_kappa(*amplitude, pt.u).1, 0.0)
            }
            ModelKind::Revolution { profile } => (profile.dkappa_dx(pt.u), 0.0),
            ModelKind::Triaxial { a, b, c } => {
                let chart = self.triaxial_chart(pt.chart).unwrap();
                let axes = [*a, *b, *c];
                let pos = chart.position(pt.u, pt.v);
                let k = triaxial_kappa(axes, pos);
                // κ = 1/(abc h⁴): ∂κ = -2κ ∂(h²)/h²
                let h2 = triaxial_h2(axes, pos);
                let (su, cu) = pt.u.sin_cos();
                let (sv, cv) = pt.v.sin_cos();
                let dpol_u = [-chart.ax[0] * su, chart.ax[1] * cu * cv, chart.ax[2] * cu * sv];
                let dpol_v = [0.0, -chart.ax[1] * su * sv, chart.ax[2] * su * cv];
                let mut dpos_u = [0.0; 3];
                let mut dpos_v = [0.0; 3];
                for i in 0..3 {
                    dpos_u[chart.perm[i]] = dpol_u[i];
                    dpos_v[chart.perm[i]] = dpol_v[i];
                }
                let dh2 = |d: [f64; 3]| {
                    2.0 * (pos[0] * d[0] / (axes[0] * axes[0])
                        + pos[1] * d[1] / (axes[1] * axes[1])
                        + pos[2] * d[2] / (axes[2] * axes[2]))
                };
                (-2.0 * k * dh2(dpos_u) / h2, -2.0 * k * dh2(dpos_v) / h2)
            }
        })
    }

    /// Squared metric norm of ∇κ.
    pub fn kappa_grad_norm2(&self, pt: &ChartPoint) -> Result<f64> {
        let g = self.metric(pt)?;
        let dk = self.kappa_grad(pt)?;
        Ok(g.dot_covectors(dk, dk))
    }

    /// Scan grid used by condition checks: `resolution` points along the
    /// non-trivial chart direction(s). Rotationally symmetric models sample a
    /// few azimuths only; triaxial models get a full 2D grid with points
    /// assigned to their owning charts.
    pub fn sample_grid(&self, resolution: usize) -> Vec<ChartPoint> {
        let res = resolution.max(4);
        match &self.kind {
            ModelKind::Sphere { .. } | ModelKind::Parametric(_) => {
                zonal_grid(0.0, PI, res.min(128), 4)
            }
            ModelKind::Revolution { profile } => {
                zonal_grid(profile.x_lo(), profile.x_hi(), res, 4)
            }
            ModelKind::Triaxial { .. } => {
                let mut pts = Vec::with_capacity(res * res);
                let main = self.triaxial_chart(ChartId::Main).unwrap();
                for i in 0..res {
                    let u = PI * (i as f64 + 0.5) / res as f64;
                    for j in 0..res {
                        let v = 2.0 * PI * (j as f64 + 0.5) / res as f64;
                        pts.push(self.owning_point(main.position(u, v)));
                    }
                }
                pts
            }
        }
    }
}

fn zonal_grid(ulo: f64, uhi: f64, nu: usize, nv: usize) -> Vec<ChartPoint> {
    let mut pts = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        let u = ulo + (uhi - ulo) * (i as f64 + 0.5) / nu as f64;
        for j in 0..nv {
            let v = 2.0 * PI * (j as f64 + 0.5) / nv as f64;
            pts.push(ChartPoint::main(u, v));
        }
    }
    pts
}

/// `h² = x²/a² + y²/b² + z²/c²` in squared semi-axes `a, b, c`.
pub(crate) fn triaxial_h2(axes: [f64; 3], pos: [f64; 3]) -> f64 {
    pos[0] * pos[0] / (axes[0] * axes[0])
        + pos[1] * pos[1] / (axes[1] * axes[1])
        + pos[2] * pos[2] / (axes[2] * axes[2])
}

/// Closed-form Gaussian curvature of `x²/a + y²/b + z²/c = 1`:
/// `κ = 1/(a b c h⁴)`.
pub(crate) fn triaxial_kappa(axes: [f64; 3], pos: [f64; 3]) -> f64 {
    let h2 = triaxial_h2(axes, pos);
    1.0 / (axes[0] * axes[1] * axes[2] * h2 * h2)
}

/// `φ, φ', φ'', φ'''` for the P₂ conformal factor.
pub(crate) fn conformal_p2_phi(a: f64, theta: f64) -> (f64, f64, f64, f64) {
    let (s, c) = theta.sin_cos();
    let phi = 0.5 * a * (3.0 * c * c - 1.0);
    let dphi = -3.0 * a * s * c;
    let d2phi = -3.0 * a * (2.0 * c * c - 1.0); // -3A cos 2θ
    let d3phi = 12.0 * a * s * c; // 6A sin 2θ
    (phi, dphi, d2phi, d3phi)
}

/// `(κ, dκ/dθ)` for the P₂-conformal sphere: `κ = e^{-2φ}(1 − Δ₀φ)`.
pub(crate) fn conformal_p2_kappa(a: f64, theta: f64) -> (f64, f64) {
    let (phi, dphi, d2phi, d3phi) = conformal_p2_phi(a, theta);
    let (s, c) = theta.sin_cos();
    let cot = c / s;
    let lap0 = d2phi + cot * dphi;
    let dlap0 = d3phi + cot * d2phi - dphi / (s * s);
    let w = (-2.0 * phi).exp();
    let kappa = w * (1.0 - lap0);
    let dkappa = w * (-2.0 * dphi * (1.0 - lap0) - dlap0);
    (kappa, dkappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sphere_and_revolution_unit_sphere_agree() {
        let sph = SurfaceModel::sphere(1.0).unwrap();
        let rev = SurfaceModel::revolution_ellipsoid(1.0).unwrap();
        let pt = ChartPoint::main(0.3, 1.0);
        assert_relative_eq!(sph.kappa(&pt).unwrap(), 1.0, epsilon = 1e-14);
        assert_relative_eq!(rev.kappa(&ChartPoint::main(0.2, 0.0)).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn triaxial_chart_metrics_consistent_with_positions() {
        // finite differences of the position map reproduce the analytic metric
        let m = SurfaceModel::triaxial(1.0, 1.1, 1.3).unwrap();
        for &chart in &[ChartId::Main, ChartId::Alt] {
            let pc = m.triaxial_chart(chart).unwrap();
            let (u, v) = (0.9, 1.3);
            let h = 1e-6;
            let dp = |f: &dyn Fn(f64, f64) -> [f64; 3], du: f64, dv: f64| {
                let p1 = f(u + du * h, v + dv * h);
                let p0 = f(u - du * h, v - dv * h);
                [(p1[0] - p0[0]) / (2.0 * h), (p1[1] - p0[1]) / (2.0 * h), (p1[2] - p0[2]) / (2.0 * h)]
            };
            let pos = |uu: f64, vv: f64| pc.position(uu, vv);
            let xu = dp(&pos, 1.0, 0.0);
            let xv = dp(&pos, 0.0, 1.0);
            let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
            let jet = pc.metric_jet(u, v);
            assert_relative_eq!(jet.m.e, dot(xu, xu), epsilon = 1e-8);
            assert_relative_eq!(jet.m.f, dot(xu, xv), epsilon = 1e-8);
            assert_relative_eq!(jet.m.g, dot(xv, xv), epsilon = 1e-8);
        }
    }

    #[test]
    fn triaxial_metric_jet_derivatives_match_fd() {
        let m = SurfaceModel::triaxial(0.9, 1.0, 1.2).unwrap();
        let pc = m.triaxial_chart(ChartId::Main).unwrap();
        let (u, v) = (1.1, 0.7);
        let h = 1e-6;
        let jet = pc.metric_jet(u, v);
        let fd_u = |get: &dyn Fn(&MetricJet) -> f64| {
            (get(&pc.metric_jet(u + h, v)) - get(&pc.metric_jet(u - h, v))) / (2.0 * h)
        };
        let fd_v = |get: &dyn Fn(&MetricJet) -> f64| {
            (get(&pc.metric_jet(u, v + h)) - get(&pc.metric_jet(u, v - h))) / (2.0 * h)
        };
        assert_relative_eq!(jet.du.e, fd_u(&|j| j.m.e), epsilon = 1e-7);
        assert_relative_eq!(jet.du.f, fd_u(&|j| j.m.f), epsilon = 1e-7);
        assert_relative_eq!(jet.du.g, fd_u(&|j| j.m.g), epsilon = 1e-7);
        assert_relative_eq!(jet.dv.e, fd_v(&|j| j.m.e), epsilon = 1e-7);
        assert_relative_eq!(jet.dv.f, fd_v(&|j| j.m.f), epsilon = 1e-7);
        assert_relative_eq!(jet.dv.g, fd_v(&|j| j.m.g), epsilon = 1e-7);
    }

    #[test]
    fn triaxial_kappa_grad_matches_fd() {
        let m = SurfaceModel::triaxial(1.0, 1.05, 1.2).unwrap();
        let pt = ChartPoint::main(1.0, 0.9);
        let h = 1e-6;
        let (du, dv) = m.kappa_grad(&pt).unwrap();
        let ku = (m.kappa(&ChartPoint::main(pt.u + h, pt.v)).unwrap()
            - m.kappa(&ChartPoint::main(pt.u - h, pt.v)).unwrap())
            / (2.0 * h);
        let kv = (m.kappa(&ChartPoint::main(pt.u, pt.v + h)).unwrap()
            - m.kappa(&ChartPoint::main(pt.u, pt.v - h)).unwrap())
            / (2.0 * h);
        assert_relative_eq!(du, ku, epsilon = 1e-7, max_relative = 1e-6);
        assert_relative_eq!(dv, kv, epsilon = 1e-7, max_relative = 1e-6);
    }

    #[test]
    fn chart_overlap_same_position_same_kappa() {
        let m = SurfaceModel::triaxial(1.0, 1.1, 1.25).unwrap();
        let main = m.triaxial_chart(ChartId::Main).unwrap();
        let alt = m.triaxial_chart(ChartId::Alt).unwrap();
        let pos = main.position(1.0, 0.4);
        let (ua, va) = alt.coords_of(pos);
        let pa = alt.position(ua, va);
        for i in 0..3 {
            assert_relative_eq!(pos[i], pa[i], epsilon = 1e-12);
        }
        let k_main = m.kappa(&ChartPoint { chart: ChartId::Main, u: 1.0, v: 0.4 }).unwrap();
        let k_alt = m.kappa(&ChartPoint { chart: ChartId::Alt, u: ua, v: va }).unwrap();
        assert_relative_eq!(k_main, k_alt, epsilon = 1e-13);
    }

    #[test]
    fn flat_profile_rejected_as_model() {
        // eps → ∞ keeps curvature positive, so fake flatness with a degenerate
        // spec instead: zero scale must be rejected up front.
        assert!(SurfaceModel::revolution_ellipsoid(0.0).is_err());
        assert!(SurfaceModel::from_spec(&SurfaceSpec::RevolutionEllipsoid { eps: 1.0, scale: 0.0 }).is_err());
    }

    #[test]
    fn surface_spec_roundtrip() {
        let spec = SurfaceSpec::Triaxial { a: 1.0, b: 1.1, c: 1.28 };
        let json = serde_json::to_string(&spec).unwrap();
        let back: SurfaceSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        let json = r#"{"kind":"revolution_ellipsoid","eps":0.9}"#;
        let spec: SurfaceSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec, SurfaceSpec::RevolutionEllipsoid { eps: 0.9, scale: 1.0 });
    }
}
