//! Covariant Hessian of chart scalar fields and the tensor-pencil maximal
//! eigenvalue used by log-concavity checks.
//!
//! `Hess f_{ij} = ∂_i∂_j f − Γ^k_{ij} ∂_k f`; the maximal eigenvalue of
//! `Hess f` relative to the metric is chart-invariant, which the two-chart
//! ellipsoid test exercises on the overlap.

use crate::metric::{max_eig_pencil_full, Christoffel, Metric2};
use crate::surface::{ChartPoint, SurfaceModel};
use crate::Result;

/// Covariant Hessian components in chart coordinates, with the first
/// derivatives and metric carried along.
#[derive(Debug, Clone, Copy)]
pub struct CovariantHessian {
    pub huu: f64,
    pub huv: f64,
    pub hvv: f64,
    pub grad: (f64, f64),
    pub metric: Metric2,
}

impl CovariantHessian {
    /// Assemble from the chart 2-jet `[f, f_u, f_v, f_uu, f_uv, f_vv]`.
    pub fn from_jet(jet2: [f64; 6], metric: Metric2, chr: &Christoffel) -> Self {
        let [_, fu, fv, fuu, fuv, fvv] = jet2;
        Self {
            huu: fuu - chr.uuu * fu - chr.vuu * fv,
            huv: fuv - chr.uuv * fu - chr.vuv * fv,
            hvv: fvv - chr.uvv * fu - chr.vvv * fv,
            grad: (fu, fv),
            metric,
        }
    }

    /// Trace with respect to the metric: the Laplace–Beltrami of the field.
    pub fn trace(&self) -> f64 {
        let (iuu, iuv, ivv) = self.metric.inv();
        iuu * self.huu + 2.0 * iuv * self.huv + ivv * self.hvv
    }

    /// Squared metric norm of the gradient.
    pub fn grad_norm2(&self) -> f64 {
        self.metric.dot_covectors(self.grad, self.grad)
    }

    /// Largest eigenvalue of `Hess f + offset·g` relative to `g`, with a
    /// `g`-unit eigenvector and a degenerate-direction flag.
    pub fn max_eig_shifted(&self, offset: f64) -> (f64, (f64, f64), bool) {
        let g = self.metric;
        let h = (
            self.huu + offset * g.e,
            self.huv + offset * g.f,
            self.hvv + offset * g.g,
        );
        max_eig_pencil_full(h, &g, 1e-11)
    }
}

/// Largest eigenvalue of a symmetric tensor `(h_uu, h_uv, h_vv)` against the
/// SPD metric `g` (convenience wrapper over the pencil solve).
pub fn max_eig_pencil(h: (f64, f64, f64), g: &Metric2) -> f64 {
    max_eig_pencil_full(h, g, 0.0).0
}

/// Covariant Hessian of an analytic field given by centered differences of a
/// value-only closure (step `h`), for tests and chart-invariance checks.
pub fn hessian_of_field(
    model: &SurfaceModel,
    pt: &ChartPoint,
    field: &dyn Fn(f64, f64) -> f64,
    h: f64,
) -> Result<CovariantHessian> {
    let (u, v) = (pt.u, pt.v);
    let f = field;
    let fu = (f(u + h, v) - f(u - h, v)) / (2.0 * h);
    let fv = (f(u, v + h) - f(u, v - h)) / (2.0 * h);
    let fuu = (f(u + h, v) - 2.0 * f(u, v) + f(u - h, v)) / (h * h);
    let fvv = (f(u, v + h) - 2.0 * f(u, v) + f(u, v - h)) / (h * h);
    let fuv = (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4.0 * h * h);
    let jet = model.metric_jet(pt)?;
    Ok(CovariantHessian::from_jet(
        [f(u, v), fu, fv, fuu, fuv, fvv],
        jet.m,
        &Christoffel::from_jet(&jet),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{ChartId, SurfaceModel};
    use approx::assert_relative_eq;

    #[test]
    fn hemisphere_log_cos_hessian() {
        // v = log cos θ on the unit sphere: Hess = diag(−sec²θ, −1) in the
        // orthonormal polar frame
        let m = SurfaceModel::sphere(1.0).unwrap();
        for &theta in &[0.3, 0.7, 1.1] {
            let pt = ChartPoint::main(theta, 0.4);
            let f = |u: f64, _v: f64| u.cos().ln();
            let hess = hessian_of_field(&m, &pt, &f, 1e-4).unwrap();
            let sec2 = 1.0 / (theta.cos() * theta.cos());
            assert_relative_eq!(hess.huu, -sec2, max_relative = 1e-6);
            // orthonormal tangential eigenvalue: h_vv / g_vv
            assert_relative_eq!(hess.hvv / hess.metric.g, -1.0, max_relative = 1e-6);
            let (mx, _, _) = hess.max_eig_shifted(0.0);
            assert_relative_eq!(mx, -1.0, max_relative = 1e-6);
        }
    }

    #[test]
    fn pencil_eigenvalue_is_chart_invariant_on_ellipsoid_overlap() {
        // same ambient function in both charts of a triaxial ellipsoid
        let m = SurfaceModel::triaxial(1.0, 1.1, 1.25).unwrap();
        let ambient = |p: [f64; 3]| (1.3 + p[0] + 0.5 * p[1] * p[1] + 0.2 * p[2]).ln();
        let main_chart = m.triaxial_chart(ChartId::Main).unwrap();
        let alt_chart = m.triaxial_chart(ChartId::Alt).unwrap();
        for &(u, v) in &[(1.2, 0.5), (0.9, 2.0), (1.5, 4.0)] {
            let pos = main_chart.position(u, v);
            let (ua, va) = alt_chart.coords_of(pos);
            let f_main = |uu: f64, vv: f64| ambient(main_chart.position(uu, vv));
            let f_alt = |uu: f64, vv: f64| ambient(alt_chart.position(uu, vv));
            let h_main = hessian_of_field(&m, &ChartPoint { chart: ChartId::Main, u, v }, &f_main, 1e-4).unwrap();
            let h_alt = hessian_of_field(&m, &ChartPoint { chart: ChartId::Alt, u: ua, v: va }, &f_alt, 1e-4).unwrap();
            let (e_main, _, _) = h_main.max_eig_shifted(0.7);
            let (e_alt, _, _) = h_alt.max_eig_shifted(0.7);
            assert_relative_eq!(e_main, e_alt, max_relative = 1e-6);
            assert_relative_eq!(h_main.trace(), h_alt.trace(), max_relative = 1e-6);
            assert_relative_eq!(h_main.grad_norm2(), h_alt.grad_norm2(), max_relative = 1e-6);
        }
    }
}
