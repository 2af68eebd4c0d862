//! Profile curves for surfaces of revolution and the radial view of a
//! rotationally symmetric metric `dr² + f(r)² dθ²`.
//!
//! Arclength derivatives of `f` are obtained by an exact chain rule from the
//! x-derivatives of the graph function `F` through order 4. Numerically
//! differentiating an integrated arclength would lose most of the accuracy the
//! fourth-order closed forms need, so no derivative here is approximated.

use crate::{GeometryError, Result};
use serde::{Deserialize, Serialize};

/// `f` and its first four arclength derivatives at a point.
#[derive(Debug, Clone, Copy)]
pub struct RadialDerivs {
    pub f: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub f4: f64,
}

/// Graph profile `z = F(x)` rotated about the x-axis.
///
/// Only the half-ellipse family `F(x) = scale · (1 − x²/(eps·scale)²)^{1/2}`
/// is supported; it closes up at both endpoints and realizes every ellipsoid
/// of revolution `x²/eps² + y² + z² = scale²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileCurve {
    pub eps: f64,
    pub scale: f64,
}

impl ProfileCurve {
    pub fn half_ellipse(eps: f64) -> Result<Self> {
        Self::half_ellipse_scaled(eps, 1.0)
    }

    pub fn half_ellipse_scaled(eps: f64, scale: f64) -> Result<Self> {
        if !(eps > 0.0) || !(scale > 0.0) {
            return Err(GeometryError::InvalidModel(format!(
                "half-ellipse profile needs eps > 0 and scale > 0, got eps={eps}, scale={scale}"
            )));
        }
        Ok(Self { eps, scale })
    }

    pub fn x_lo(&self) -> f64 {
        -self.eps * self.scale
    }

    pub fn x_hi(&self) -> f64 {
        self.eps * self.scale
    }

    /// `F` and its x-derivatives through order 4. `F > 0` is required, so the
    /// closed endpoints are excluded.
    pub fn graph_derivs(&self, x: f64) -> Result<[f64; 5]> {
        let (e, s) = (self.eps, self.scale);
        let w2 = s * s - x * x / (e * e);
        if w2 <= 0.0 {
            return Err(GeometryError::DegenerateProfile { f: w2.max(0.0).sqrt() });
        }
        let w = w2.sqrt();
        let e2 = e * e;
        let f1 = -x / (e2 * w);
        let f2 = -s * s / (e2 * w * w2);
        let f3 = -3.0 * s * s * x / (e2 * e2 * w * w2 * w2);
        let f4 = -3.0 * s * s * (e2 * w2 + 5.0 * x * x) / (e2 * e2 * e2 * w * w2 * w2 * w2);
        Ok([w, f1, f2, f3, f4])
    }

    /// `ds/dx = sqrt(1 + F'(x)²)`.
    pub fn ds_dx(&self, x: f64) -> Result<f64> {
        let d = self.graph_derivs(x)?;
        Ok((1.0 + d[1] * d[1]).sqrt())
    }

    /// Arclength derivatives of `f(r(x)) = F(x)` by exact chain rule.
    pub fn radial_derivs(&self, x: f64) -> Result<RadialDerivs> {
        let [f0, g1, g2, g3, g4] = self.graph_derivs(x)?;
        let s2 = 1.0 + g1 * g1;
        let s = s2.sqrt();
        let s4 = s2 * s2;
        let s6 = s4 * s2;
        let s8 = s4 * s4;
        Ok(RadialDerivs {
            f: f0,
            f1: g1 / s,
            f2: g2 / s4,
            f3: g3 / (s4 * s) - 4.0 * g1 * g2 * g2 / (s6 * s),
            f4: g4 / s6 - (4.0 * g2 * g2 * g2 + 13.0 * g1 * g2 * g3) / s8
                + 28.0 * g1 * g1 * g2 * g2 * g2 / (s8 * s2),
        })
    }

    /// Gaussian curvature as a function of `x`, in the cancellation-free form
    /// `κ = scale² eps⁶ / (eps⁴ scale² + x²(1 − eps²))²`. Extends continuously
    /// to the closed endpoints.
    pub fn kappa(&self, x: f64) -> f64 {
        let g = self.g_poly(x);
        let e2 = self.eps * self.eps;
        self.scale * self.scale * e2 * e2 * e2 / (g * g)
    }

    pub fn dkappa_dx(&self, x: f64) -> f64 {
        let g = self.g_poly(x);
        let gp = 2.0 * x * (1.0 - self.eps * self.eps);
        -2.0 * self.kappa(x) * gp / g
    }

    fn g_poly(&self, x: f64) -> f64 {
        let e2 = self.eps * self.eps;
        e2 * e2 * self.scale * self.scale + x * x * (1.0 - e2)
    }

    /// Arclength from the left pole to the point with parameter `t ∈ [0, π]`
    /// of `x = eps·scale·cos(π − t)`… i.e. the ellipse parametrized so that
    /// `t = 0` is `x_lo` and `t = π` is `x_hi`. `dr/dt` is smooth, so a
    /// composite Gauss–Legendre rule converges to machine precision.
    pub fn r_of_t(&self, t: f64) -> f64 {
        gauss_legendre(|tau| self.dr_dt(tau), 0.0, t, 64)
    }

    pub fn dr_dt(&self, t: f64) -> f64 {
        let (st, ct) = t.sin_cos();
        self.scale * (ct * ct + self.eps * self.eps * st * st).sqrt()
    }

    pub fn t_of_x(&self, x: f64) -> f64 {
        // x = -eps*scale*cos t
        (-x / (self.eps * self.scale)).clamp(-1.0, 1.0).acos()
    }

    pub fn x_of_t(&self, t: f64) -> f64 {
        -self.eps * self.scale * t.cos()
    }

    pub fn r_of_x(&self, x: f64) -> f64 {
        self.r_of_t(self.t_of_x(x))
    }

    /// Total arclength of the profile (pole to pole).
    pub fn r_total(&self) -> f64 {
        self.r_of_t(std::f64::consts::PI)
    }

    /// Invert `r(t)` by Newton with bisection fallback.
    pub fn t_of_r(&self, r: f64) -> f64 {
        let total = self.r_total();
        let target = r.clamp(0.0, total);
        let mut lo = 0.0f64;
        let mut hi = std::f64::consts::PI;
        let mut t = std::f64::consts::PI * target / total;
        for _ in 0..60 {
            let fr = self.r_of_t(t) - target;
            let step = fr / self.dr_dt(t);
            if step.abs() < 1e-14 * (1.0 + target) {
                break;
            }
            if fr > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            let next = t - step;
            t = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
        }
        t
    }

    pub fn x_of_r(&self, r: f64) -> f64 {
        self.x_of_t(self.t_of_r(r))
    }
}

/// Rotationally symmetric metric `dr² + f(r)² dθ²` with exact derivatives of
/// `f`, the shared substrate for caps, meshes, and the radial eigen oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RadialMetric {
    /// `f = R sin(r/R)`, the round sphere of radius `R`.
    Sphere { radius: f64 },
    /// `f = r`, the flat plane in polar coordinates (κ = 0). Rejected as an
    /// ambient model; kept for oracle and control runs.
    Flat,
    /// Profile revolution surface, `r` measured from the pole at `x_lo`.
    Profile(ProfileCurve),
}

impl RadialMetric {
    pub fn f_derivs(&self, r: f64) -> RadialDerivs {
        match self {
            RadialMetric::Sphere { radius } => {
                let rr = r / radius;
                let (s, c) = rr.sin_cos();
                RadialDerivs {
                    f: radius * s,
                    f1: c,
                    f2: -s / radius,
                    f3: -c / (radius * radius),
                    f4: s / (radius * radius * radius),
                }
            }
            RadialMetric::Flat => RadialDerivs { f: r, f1: 1.0, f2: 0.0, f3: 0.0, f4: 0.0 },
            RadialMetric::Profile(p) => {
                // exact at the pole by the smooth closure f = r + O(r³)
                let t = p.t_of_r(r);
                let x = p.x_of_t(t);
                p.radial_derivs(x).unwrap_or(RadialDerivs {
                    f: 0.0,
                    f1: 1.0,
                    f2: 0.0,
                    f3: 0.0,
                    f4: 0.0,
                })
            }
        }
    }

    pub fn f(&self, r: f64) -> f64 {
        self.f_derivs(r).f
    }

    /// Gaussian curvature along the profile; the pole value is the continuous
    /// limit (`-f'''/f'` as `f → 0`).
    pub fn kappa(&self, r: f64) -> f64 {
        match self {
            RadialMetric::Sphere { radius } => 1.0 / (radius * radius),
            RadialMetric::Flat => 0.0,
            RadialMetric::Profile(p) => p.kappa(p.x_of_r(r)),
        }
    }

    /// Half the range of `r` values: pole to far end of the chart.
    pub fn r_max(&self) -> f64 {
        match self {
            RadialMetric::Sphere { radius } => std::f64::consts::PI * radius,
            RadialMetric::Flat => f64::INFINITY,
            RadialMetric::Profile(p) => p.r_total(),
        }
    }
}

/// Composite Gauss–Legendre quadrature (5-point rule per panel).
pub fn gauss_legendre<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    const X: [f64; 5] = [
        -0.906179845938663992797626878299,
        -0.538469310105683091036314420700,
        0.0,
        0.538469310105683091036314420700,
        0.906179845938663992797626878299,
    ];
    const W: [f64; 5] = [
        0.236926885056189087514264040720,
        0.478628670499366468041291514836,
        0.568888888888888888888888888889,
        0.478628670499366468041291514836,
        0.236926885056189087514264040720,
    ];
    let n = panels.max(1);
    let hw = (b - a) / n as f64;
    let mut sum = 0.0;
    for i in 0..n {
        let mid = a + (i as f64 + 0.5) * hw;
        let mut panel = 0.0;
        for k in 0..5 {
            panel += W[k] * f(mid + 0.5 * hw * X[k]);
        }
        sum += panel * 0.5 * hw;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn unit_sphere_profile_matches_sin() {
        // eps = 1 closes to the unit sphere: f(r) = sin r
        let p = ProfileCurve::half_ellipse(1.0).unwrap();
        for &r in &[0.3, 0.9, 1.5, 2.2] {
            let x = p.x_of_r(r);
            let d = p.radial_derivs(x).unwrap();
            assert_relative_eq!(d.f, r.sin(), epsilon = 1e-12);
            assert_relative_eq!(d.f1, r.cos(), epsilon = 1e-11);
            assert_relative_eq!(d.f2, -r.sin(), epsilon = 1e-10);
            assert_relative_eq!(d.f3, -r.cos(), epsilon = 1e-9);
            assert_relative_eq!(d.f4, r.sin(), epsilon = 1e-8);
        }
    }

    #[test]
    fn pole_graph_values_match_closed_forms() {
        let eps: f64 = 0.9;
        let p = ProfileCurve::half_ellipse(eps).unwrap();
        let d = p.graph_derivs(0.0).unwrap();
        assert_relative_eq!(d[0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(d[1], 0.0, epsilon = 1e-15);
        assert_relative_eq!(d[2], -1.0 / (eps * eps), epsilon = 1e-14);
        assert_relative_eq!(d[3], 0.0, epsilon = 1e-15);
        assert_relative_eq!(d[4], -3.0 / eps.powi(4), epsilon = 1e-14);
        // chain rule at the equator: f'''' = F'''' - 4 F''^3
        let rd = p.radial_derivs(0.0).unwrap();
        assert_relative_eq!(rd.f4, -3.0 / eps.powi(4) + 4.0 / eps.powi(6), epsilon = 1e-13);
    }

    #[test]
    fn kappa_closed_form_agrees_with_minus_f2_over_f() {
        let p = ProfileCurve::half_ellipse(0.8).unwrap();
        for &x in &[-0.6, -0.3, 0.0, 0.2, 0.55] {
            let d = p.radial_derivs(x).unwrap();
            assert_relative_eq!(p.kappa(x), -d.f2 / d.f, epsilon = 1e-12);
        }
        // endpoint limit: κ(±eps) = eps²
        assert_relative_eq!(p.kappa(0.8), 0.8f64.powi(2), epsilon = 1e-13);
    }

    #[test]
    fn arclength_roundtrip_and_total() {
        let p = ProfileCurve::half_ellipse(1.0).unwrap();
        // unit sphere: total arclength pole-to-pole is π
        assert_relative_eq!(p.r_total(), std::f64::consts::PI, epsilon = 1e-12);
        let p = ProfileCurve::half_ellipse(0.85).unwrap();
        for &r in &[0.1, 0.5, 1.2, 1.9] {
            let x = p.x_of_r(r);
            assert_relative_eq!(p.r_of_x(x), r, epsilon = 1e-10);
        }
    }

    #[test]
    fn chain_rule_roundtrip_reproduces_x_derivative() {
        // d/dr (f) * dr/dx equals dF/dx to machine tolerance
        let p = ProfileCurve::half_ellipse(0.9).unwrap();
        for &x in &[-0.5, 0.0, 0.4] {
            let g = p.graph_derivs(x).unwrap();
            let rd = p.radial_derivs(x).unwrap();
            let s = p.ds_dx(x).unwrap();
            assert_relative_eq!(rd.f1 * s, g[1], epsilon = 1e-13);
        }
    }

    #[test]
    fn scaled_profile_curvature_covariance() {
        let base = ProfileCurve::half_ellipse(0.9).unwrap();
        let rho = 1.7;
        let scaled = ProfileCurve::half_ellipse_scaled(0.9, rho).unwrap();
        for &x in &[-0.4, 0.0, 0.3] {
            assert_relative_eq!(scaled.kappa(rho * x), base.kappa(x) / (rho * rho), epsilon = 1e-12);
        }
    }
}
