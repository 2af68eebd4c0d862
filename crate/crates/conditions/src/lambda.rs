//! First-eigenvalue lower bounds with explicit provenance.

use crate::{ConditionError, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// How a `λ₁` lower bound was produced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum LambdaMode {
    UserSupplied,
    /// `λ₁ ≥ ½(n−1)κ_min + π²/d²`, `d` the inscribed-ball diameter.
    Ling,
    /// `λ₁ ≥ ½(n+1)κ_min`, from the Myers diameter bound.
    MyersCombined,
}

/// A resolved lower bound together with its provenance, echoed in reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaBound {
    pub value: f64,
    pub mode: LambdaMode,
}

impl LambdaBound {
    pub fn user(value: f64) -> Result<Self> {
        if !(value > 0.0) {
            return Err(ConditionError::InvalidParameter(format!(
                "λ lower bound must be positive, got {value}"
            )));
        }
        Ok(Self { value, mode: LambdaMode::UserSupplied })
    }

    pub fn ling(kappa_min: f64, inscribed_diameter: f64, n: usize) -> Result<Self> {
        Ok(Self {
            value: lambda_lower_bound(kappa_min, Some(inscribed_diameter), n, LambdaMode::Ling)?,
            mode: LambdaMode::Ling,
        })
    }

    pub fn myers(kappa_min: f64, n: usize) -> Result<Self> {
        Ok(Self {
            value: lambda_lower_bound(kappa_min, None, n, LambdaMode::MyersCombined)?,
            mode: LambdaMode::MyersCombined,
        })
    }
}

/// Selected lower bound on `λ₁(Ω)`. Ling mode requires the inscribed-ball
/// diameter `d`; values of `d` at or beyond the Myers diameter cap `π/√κ_min`
/// are inconsistent and rejected.
pub fn lambda_lower_bound(
    kappa_min: f64,
    inscribed_diameter: Option<f64>,
    n: usize,
    mode: LambdaMode,
) -> Result<f64> {
    if !(kappa_min >= 0.0) {
        return Err(ConditionError::InvalidParameter(format!("κ_min must be ≥ 0, got {kappa_min}")));
    }
    match mode {
        LambdaMode::UserSupplied => Err(ConditionError::InvalidParameter(
            "user-supplied mode carries its own value".into(),
        )),
        LambdaMode::MyersCombined => {
            if !(kappa_min > 0.0) {
                return Err(ConditionError::InvalidParameter(
                    "Myers-combined bound needs κ_min > 0".into(),
                ));
            }
            Ok(0.5 * (n as f64 + 1.0) * kappa_min)
        }
        LambdaMode::Ling => {
            let d = inscribed_diameter.ok_or_else(|| {
                ConditionError::InvalidParameter("Ling bound needs the inscribed diameter".into())
            })?;
            if !(d > 0.0) {
                return Err(ConditionError::InvalidParameter(format!("diameter must be > 0, got {d}")));
            }
            if kappa_min > 0.0 {
                let myers_cap = PI / kappa_min.sqrt();
                if d >= myers_cap {
                    return Err(ConditionError::InconsistentDiameter { d, myers_cap });
                }
            }
            Ok(0.5 * (n as f64 - 1.0) * kappa_min + PI * PI / (d * d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ling_bound_example() {
        let v = lambda_lower_bound(1.0, Some(PI / 2.0), 2, LambdaMode::Ling).unwrap();
        assert_relative_eq!(v, 4.5, epsilon = 1e-14);
    }

    #[test]
    fn myers_combined_example() {
        let v = lambda_lower_bound(1.0, None, 2, LambdaMode::MyersCombined).unwrap();
        assert_relative_eq!(v, 1.5, epsilon = 1e-15);
    }

    #[test]
    fn ling_flat_limit() {
        let d = 0.8;
        let v = lambda_lower_bound(0.0, Some(d), 2, LambdaMode::Ling).unwrap();
        assert_relative_eq!(v, PI * PI / (d * d), epsilon = 1e-14);
    }

    #[test]
    fn ling_rejects_diameter_beyond_myers_cap() {
        let err = lambda_lower_bound(1.0, Some(PI), 2, LambdaMode::Ling);
        assert!(matches!(err, Err(ConditionError::InconsistentDiameter { .. })));
    }
}
