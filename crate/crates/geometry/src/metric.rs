//! First fundamental form on a 2D chart and the small pieces of linear algebra
//! built on it: inverses, Christoffel symbols, and the symmetric 2x2 pencil
//! eigenproblem used by tensor-inequality checks.

use serde::{Deserialize, Serialize};

/// Metric components of `ds² = e du² + 2 f du dv + g dv²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Metric2 {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl Metric2 {
    pub fn new(e: f64, f: f64, g: f64) -> Self {
        Self { e, f, g }
    }

    pub fn det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }

    pub fn sqrt_det(&self) -> f64 {
        self.det().sqrt()
    }

    pub fn is_spd(&self) -> bool {
        self.e > 0.0 && self.det() > 0.0
    }

    /// Inverse metric components `(g^{uu}, g^{uv}, g^{vv})`.
    pub fn inv(&self) -> (f64, f64, f64) {
        let d = self.det();
        (self.g / d, -self.f / d, self.e / d)
    }

    /// Inner product of two chart covectors (e.g. differentials of scalars).
    pub fn dot_covectors(&self, a: (f64, f64), b: (f64, f64)) -> f64 {
        let (iuu, iuv, ivv) = self.inv();
        iuu * a.0 * b.0 + iuv * (a.0 * b.1 + a.1 * b.0) + ivv * a.1 * b.1
    }

    /// Inner product of two chart vectors.
    pub fn dot_vectors(&self, a: (f64, f64), b: (f64, f64)) -> f64 {
        self.e * a.0 * b.0 + self.f * (a.0 * b.1 + a.1 * b.0) + self.g * a.1 * b.1
    }

    pub fn scale(&self, rho2: f64) -> Self {
        Self::new(self.e * rho2, self.f * rho2, self.g * rho2)
    }
}

/// Metric together with its first derivatives in the chart directions.
#[derive(Debug, Clone, Copy)]
pub struct MetricJet {
    pub m: Metric2,
    pub du: Metric2,
    pub dv: Metric2,
}

/// Christoffel symbols `Γ^k_{ij}` of a 2D chart, `k, i, j ∈ {u, v}`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Christoffel {
    pub uuu: f64,
    pub uuv: f64,
    pub uvv: f64,
    pub vuu: f64,
    pub vuv: f64,
    pub vvv: f64,
}

impl Christoffel {
    /// `Γ^k_{ij} = ½ g^{kl} (∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})`.
    pub fn from_jet(jet: &MetricJet) -> Self {
        let (iuu, iuv, ivv) = jet.m.inv();
        // partials of metric entries: d[i][j][k] = ∂_k g_{ij}
        let eu = jet.du.e;
        let ev = jet.dv.e;
        let fu = jet.du.f;
        let fv = jet.dv.f;
        let gu = jet.du.g;
        let gv = jet.dv.g;

        // lowered symbols Γ_{l,ij} = ½ (∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})
        let l_u_uu = 0.5 * eu;
        let l_v_uu = fu - 0.5 * ev;
        let l_u_uv = 0.5 * ev;
        let l_v_uv = 0.5 * gu;
        let l_u_vv = fv - 0.5 * gu;
        let l_v_vv = 0.5 * gv;

        Self {
            uuu: iuu * l_u_uu + iuv * l_v_uu,
            uuv: iuu * l_u_uv + iuv * l_v_uv,
            uvv: iuu * l_u_vv + iuv * l_v_vv,
            vuu: iuv * l_u_uu + ivv * l_v_uu,
            vuv: iuv * l_u_uv + ivv * l_v_uv,
            vvv: iuv * l_u_vv + ivv * l_v_vv,
        }
    }
}

/// Largest eigenvalue of the symmetric pencil `H x = μ G x` with `G` SPD,
/// together with a `G`-unit eigenvector. `H` is given as `(h_uu, h_uv, h_vv)`.
///
/// When the two eigenvalues coincide within `tie_tol` the direction is
/// degenerate; the returned vector is the normalized `∂u` direction and the
/// flag is set (deterministic tie-break by smaller parameter angle).
pub fn max_eig_pencil_full(
    h: (f64, f64, f64),
    g: &Metric2,
    tie_tol: f64,
) -> (f64, (f64, f64), bool) {
    let a = g.det();
    let b = g.e * h.2 + g.g * h.0 - 2.0 * g.f * h.1;
    let c = h.0 * h.2 - h.1 * h.1;
    let disc = (b * b - 4.0 * a * c).max(0.0);
    let sq = disc.sqrt();
    let mu_max = (b + sq) / (2.0 * a);

    let scale = h.0.abs().max(h.2.abs()).max(h.1.abs()).max(1e-300);
    if sq <= tie_tol * scale {
        let x = (1.0 / g.e.sqrt(), 0.0);
        return (mu_max, x, true);
    }
    // (H − μG) x = 0; pick the numerically larger row
    let r0 = (h.0 - mu_max * g.e, h.1 - mu_max * g.f);
    let r1 = (h.1 - mu_max * g.f, h.2 - mu_max * g.g);
    let x = if r0.0.abs() + r0.1.abs() >= r1.0.abs() + r1.1.abs() {
        (-r0.1, r0.0)
    } else {
        (-r1.1, r1.0)
    };
    let n = g.dot_vectors(x, x).sqrt();
    (mu_max, (x.0 / n, x.1 / n), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn christoffel_polar_metric() {
        // dr² + f² dθ² with f = sin r at r = 0.7: Γ^r_θθ = -f f', Γ^θ_rθ = f'/f
        let r: f64 = 0.7;
        let (f, fp) = (r.sin(), r.cos());
        let jet = MetricJet {
            m: Metric2::new(1.0, 0.0, f * f),
            du: Metric2::new(0.0, 0.0, 2.0 * f * fp),
            dv: Metric2::new(0.0, 0.0, 0.0),
        };
        let c = Christoffel::from_jet(&jet);
        assert_relative_eq!(c.uvv, -f * fp, epsilon = 1e-14);
        assert_relative_eq!(c.vuv, fp / f, epsilon = 1e-14);
        assert_relative_eq!(c.uuu, 0.0, epsilon = 1e-14);
        assert_relative_eq!(c.vvv, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn pencil_reduces_to_plain_eigenproblem_for_identity_metric() {
        let g = Metric2::new(1.0, 0.0, 1.0);
        let (mu, x, tie) = max_eig_pencil_full((2.0, 1.0, 2.0), &g, 1e-14);
        assert!(!tie);
        assert_relative_eq!(mu, 3.0, epsilon = 1e-12);
        assert_relative_eq!(x.0.abs(), x.1.abs(), epsilon = 1e-12);
    }

    #[test]
    fn pencil_tie_break_is_du_direction() {
        let g = Metric2::new(4.0, 0.0, 1.0);
        let (mu, x, tie) = max_eig_pencil_full((-4.0, 0.0, -1.0), &g, 1e-12);
        assert!(tie, "proportional H and G have a repeated eigenvalue");
        assert_relative_eq!(mu, -1.0, epsilon = 1e-12);
        assert_relative_eq!(x.0, 0.5, epsilon = 1e-12);
        assert_relative_eq!(x.1, 0.0, epsilon = 1e-12);
    }
}
