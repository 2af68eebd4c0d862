//! Analytic surface models with positive Gaussian curvature and the intrinsic
//! differential operators needed to evaluate fourth-order curvature quantities.
//!
//! The central object is [`SurfaceModel`]: a round sphere, an ellipsoid of
//! revolution given by its profile curve, a triaxial ellipsoid charted by two
//! overlapping polar parametrizations, or a named parametric chart. Every model
//! exposes Gaussian curvature `κ`, its gradient, and `Δ log κ` — the last one
//! either through an exact chain-rule closed form (surfaces of revolution) or
//! through a divergence-form Laplace–Beltrami stencil on the chart.

pub mod curvature;
pub mod hessian;
pub mod laplace;
pub mod metric;
pub mod profile;
pub mod surface;

pub use curvature::{
    curvature_extrema, curvature_sample, delta_log_kappa, delta_log_kappa_fd, gauss_bonnet_integral,
    gaussian_curvature, CurvatureExtrema, CurvatureSample,
};
pub use hessian::{hessian_of_field, max_eig_pencil, CovariantHessian};
pub use laplace::{laplace_beltrami, laplace_beltrami_fd, laplace_beltrami_fd_richardson, ScalarField};
pub use metric::{Christoffel, Metric2, MetricJet};
pub use profile::{gauss_legendre, ProfileCurve, RadialDerivs, RadialMetric};
pub use surface::{ChartId, ChartPoint, ParametricKind, SurfaceModel, SurfaceSpec};

/// Errors produced by surface construction and pointwise evaluation.
#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("point ({u}, {v}) outside chart domain")]
    PointOutsideChart { u: f64, v: f64 },
    #[error("non-positive Gaussian curvature {kappa} at ({u}, {v}); model requires κ > 0")]
    NonPositiveCurvature { kappa: f64, u: f64, v: f64 },
    #[error("degenerate profile: f = {f} at interior point")]
    DegenerateProfile { f: f64 },
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("finite-difference stencil leaves the chart at ({u}, {v})")]
    StencilOutsideChart { u: f64, v: f64 },
}

pub type Result<T> = std::result::Result<T, GeometryError>;
