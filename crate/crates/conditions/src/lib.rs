//! Pointwise curvature-condition margins and verdicts.
//!
//! The margin of the general condition at barrier offset `C` is
//!
//! ```text
//! margin = Δ log κ + 4 λ_lb − 5κ − 4C(C/κ + 3)
//! ```
//!
//! and the condition holds where the margin is positive. The pinched variants
//! fold the Myers-combined eigenvalue bound `λ ≥ (n+1)κ_min/2` into the
//! margin; the spectral-dominance margin is the same quantity at
//! `C = −κ_min/2` (checked as an identity at every grid point).

pub mod lambda;
pub mod margins;
pub mod report;
pub mod threshold;

pub use lambda::{lambda_lower_bound, LambdaBound, LambdaMode};
pub use margins::{
    dominance_margin, general_margin, pinched_c0_margin, pinched_chalf_margin, triaxial_margin,
};
pub use report::{
    check_condition, check_pinched_conditions, check_spectral_dominance, check_triaxial_quantity,
    ConditionKind, ConditionReport, ConditionSpec, MarginSample,
};
pub use threshold::{threshold_solve, SweepSpec};

use gaplab_geometry::GeometryError;

#[derive(Debug, thiserror::Error)]
pub enum ConditionError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("no sign change in sweep range [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("inscribed diameter {d} is inconsistent with Myers bound π/√κ_min = {myers_cap}")]
    InconsistentDiameter { d: f64, myers_cap: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, ConditionError>;
