//! Laplace–Beltrami operator on chart scalar fields.
//!
//! Two paths: divergence form `Δf = (1/√g) ∂_i(√g g^{ij} ∂_j f)` with nested
//! centered differences (second-order, optional Richardson extrapolation),
//! and an exact path `Δf = g^{ij}(∂_i∂_j f − Γ^k_{ij} ∂_k f)` when the field
//! carries analytic derivatives.

use crate::metric::Christoffel;
use crate::surface::{ChartId, ChartPoint, SurfaceModel};
use crate::{GeometryError, Result};

/// A scalar field on a chart: plain values, or values with exact derivatives
/// `[f, f_u, f_v, f_uu, f_uv, f_vv]`.
pub enum ScalarField<'a> {
    Values(&'a dyn Fn(f64, f64) -> f64),
    Analytic(&'a dyn Fn(f64, f64) -> [f64; 6]),
}

/// Divergence-form Laplace–Beltrami of a value-only field at `(u, v)` on the
/// given chart, step `h`. The stencil reaches `u ± 2h`; leaving the chart in
/// the `u` direction is an error (`v` is periodic on all charts).
pub fn laplace_beltrami_fd(
    model: &SurfaceModel,
    chart: ChartId,
    field: &dyn Fn(f64, f64) -> f64,
    u: f64,
    v: f64,
    h: f64,
) -> Result<f64> {
    let ((ulo, uhi), _, _) = model.chart_domain(chart);
    if u - 2.0 * h < ulo || u + 2.0 * h > uhi {
        return Err(GeometryError::StencilOutsideChart { u, v });
    }
    let flux = |uu: f64, vv: f64| -> Result<(f64, f64)> {
        let m = model.metric(&ChartPoint { chart, u: uu, v: vv })?;
        let (iuu, iuv, ivv) = m.inv();
        let sq = m.sqrt_det();
        let fu = (field(uu + h, vv) - field(uu - h, vv)) / (2.0 * h);
        let fv = (field(uu, vv + h) - field(uu, vv - h)) / (2.0 * h);
        Ok((sq * (iuu * fu + iuv * fv), sq * (iuv * fu + ivv * fv)))
    };
    let (pu_p, _) = flux(u + h, v)?;
    let (pu_m, _) = flux(u - h, v)?;
    let (_, qv_p) = flux(u, v + h)?;
    let (_, qv_m) = flux(u, v - h)?;
    let sq0 = model.metric(&ChartPoint { chart, u, v })?.sqrt_det();
    Ok(((pu_p - pu_m) + (qv_p - qv_m)) / (2.0 * h * sq0))
}

/// Same as [`laplace_beltrami_fd`] with one Richardson extrapolation step
/// (`(4·Δ_{h/2} − Δ_h)/3`, fourth-order accurate).
pub fn laplace_beltrami_fd_richardson(
    model: &SurfaceModel,
    chart: ChartId,
    field: &dyn Fn(f64, f64) -> f64,
    u: f64,
    v: f64,
    h: f64,
) -> Result<f64> {
    let coarse = laplace_beltrami_fd(model, chart, field, u, v, h)?;
    let fine = laplace_beltrami_fd(model, chart, field, u, v, 0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Exact-derivative path from an analytic 2-jet of the field.
pub fn laplace_beltrami_exact(model: &SurfaceModel, pt: &ChartPoint, jet2: [f64; 6]) -> Result<f64> {
    let mjet = model.metric_jet(pt)?;
    let (iuu, iuv, ivv) = mjet.m.inv();
    let c = Christoffel::from_jet(&mjet);
    let [_, fu, fv, fuu, fuv, fvv] = jet2;
    let huu = fuu - c.uuu * fu - c.vuu * fv;
    let huv = fuv - c.uuv * fu - c.vuv * fv;
    let hvv = fvv - c.uvv * fu - c.vvv * fv;
    Ok(iuu * huu + 2.0 * iuv * huv + ivv * hvv)
}

/// Laplace–Beltrami of a field at a chart point; dispatches on the field
/// representation. `h` is the step for the finite-difference path.
pub fn laplace_beltrami(
    model: &SurfaceModel,
    pt: &ChartPoint,
    field: &ScalarField,
    h: f64,
) -> Result<f64> {
    match field {
        ScalarField::Values(f) => laplace_beltrami_fd_richardson(model, pt.chart, f, pt.u, pt.v, h),
        ScalarField::Analytic(f) => laplace_beltrami_exact(model, pt, f(pt.u, pt.v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceModel;
    use approx::assert_relative_eq;

    #[test]
    fn constant_field_has_zero_laplacian() {
        let m = SurfaceModel::sphere(1.0).unwrap();
        let f = |_u: f64, _v: f64| 3.25;
        let val = laplace_beltrami_fd(&m, ChartId::Main, &f, 1.0, 0.5, 1e-3).unwrap();
        assert_relative_eq!(val, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn degree_one_zonal_harmonic() {
        // Δ cos θ = -2 cos θ on the unit sphere
        let m = SurfaceModel::sphere(1.0).unwrap();
        let f = |u: f64, _v: f64| u.cos();
        for &u in &[0.4, 1.0, 1.9, 2.6] {
            let val = laplace_beltrami_fd_richardson(&m, ChartId::Main, &f, u, 0.3, 1e-3).unwrap();
            assert_relative_eq!(val, -2.0 * u.cos(), epsilon = 1e-8);
        }
    }

    #[test]
    fn degree_two_zonal_harmonic() {
        // P₂(cos θ) has eigenvalue -6
        let m = SurfaceModel::sphere(1.0).unwrap();
        let f = |u: f64, _v: f64| 0.5 * (3.0 * u.cos() * u.cos() - 1.0);
        for &u in &[0.5, 1.2, 2.2] {
            let val = laplace_beltrami_fd_richardson(&m, ChartId::Main, &f, u, 1.1, 1e-3).unwrap();
            assert_relative_eq!(val, -6.0 * f(u, 0.0), epsilon = 1e-8);
        }
    }

    #[test]
    fn exact_path_matches_fd_path() {
        let m = SurfaceModel::sphere(1.0).unwrap();
        let f = |u: f64, _v: f64| u.cos();
        let jet = |u: f64, _v: f64| [u.cos(), -u.sin(), 0.0, -u.cos(), 0.0, 0.0];
        let pt = ChartPoint::main(1.1, 0.2);
        let exact = laplace_beltrami(&m, &pt, &ScalarField::Analytic(&jet), 1e-3).unwrap();
        let fd = laplace_beltrami(&m, &pt, &ScalarField::Values(&f), 1e-3).unwrap();
        assert_relative_eq!(exact, -2.0 * 1.1f64.cos(), epsilon = 1e-12);
        assert_relative_eq!(exact, fd, epsilon = 1e-8);
    }

    #[test]
    fn stencil_outside_chart_is_reported() {
        let m = SurfaceModel::sphere(1.0).unwrap();
        let f = |_u: f64, _v: f64| 1.0;
        let err = laplace_beltrami_fd(&m, ChartId::Main, &f, 1e-5, 0.0, 1e-3);
        assert!(matches!(err, Err(crate::GeometryError::StencilOutsideChart { .. })));
    }

    #[test]
    fn nonzonal_harmonic_on_sphere() {
        // Y_2^1 ∝ sin θ cos θ cos φ, eigenvalue -6; exercises the mixed terms
        let m = SurfaceModel::sphere(1.0).unwrap();
        let f = |u: f64, v: f64| u.sin() * u.cos() * v.cos();
        for &(u, v) in &[(0.8, 0.3), (1.4, 2.0), (2.1, 4.4)] {
            let val = laplace_beltrami_fd_richardson(&m, ChartId::Main, &f, u, v, 1e-3).unwrap();
            assert_relative_eq!(val, -6.0 * f(u, v), epsilon = 1e-7, max_relative = 1e-6);
        }
    }
}
