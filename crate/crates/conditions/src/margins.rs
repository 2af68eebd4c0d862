//! The margin formulas, as pure functions of pointwise curvature data.

/// General condition margin: `Δ log κ + 4λ − 5κ − 4C(C/κ + 3)`.
pub fn general_margin(delta_log_kappa: f64, kappa: f64, lambda_lb: f64, c: f64) -> f64 {
    delta_log_kappa + 4.0 * lambda_lb - 5.0 * kappa - 4.0 * c * (c / kappa + 3.0)
}

/// Pinched condition with `C = 0` and the Myers-combined bound folded in:
/// `Δ log κ − 5κ + 6 κ_min` (positivity gives `Hess log u₁ ≤ −κ/2`).
pub fn pinched_c0_margin(delta_log_kappa: f64, kappa: f64, kappa_min: f64) -> f64 {
    delta_log_kappa - 5.0 * kappa + 6.0 * kappa_min
}

/// Pinched condition with `C = −κ_min/2`, conservatively weakened through
/// `κ_min²/κ ≤ κ_min`: `Δ log κ − 5κ + 11 κ_min` (gives `Hess log u₁ ≤ 0`).
pub fn pinched_chalf_margin(delta_log_kappa: f64, kappa: f64, kappa_min: f64) -> f64 {
    delta_log_kappa - 5.0 * kappa + 11.0 * kappa_min
}

/// Spectral-dominance margin,
/// `Δ log κ − (4/κ)(κ/2 − κ_min/2)² + 4λ − 8(κ/2 − κ_min/2)`.
///
/// Algebraically identical to [`general_margin`] at `C = −κ_min/2`; both are
/// evaluated and compared during grid checks.
pub fn dominance_margin(delta_log_kappa: f64, kappa: f64, kappa_min: f64, lambda_lb: f64) -> f64 {
    let half_diff = 0.5 * (kappa - kappa_min);
    delta_log_kappa - 4.0 / kappa * half_diff * half_diff + 4.0 * lambda_lb - 8.0 * half_diff
}

/// Triaxial scan quantity `Δ log κ − 5κ + 12 κ_min − κ_min²/κ`: the
/// spectral-dominance margin with the Myers-combined `λ = 3 κ_min/2`.
pub fn triaxial_margin(delta_log_kappa: f64, kappa: f64, kappa_min: f64) -> f64 {
    delta_log_kappa - 5.0 * kappa + 12.0 * kappa_min - kappa_min * kappa_min / kappa
}
