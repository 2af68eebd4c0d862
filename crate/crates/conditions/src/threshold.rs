//! Bisection for the critical family parameter where a margin minimum
//! crosses zero.

use crate::{ConditionError, Result};

/// Sweep range and sampling density for [`threshold_solve`].
#[derive(Debug, Clone, Copy)]
pub struct SweepSpec {
    pub lo: f64,
    pub hi: f64,
    pub samples: usize,
    pub tol: f64,
}

impl SweepSpec {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi, samples: 64, tol: 1e-6 }
    }
}

/// Locate the zero of `margin(param)` inside the sweep range.
///
/// The sweep samples the margin, takes the first sign-change bracket, checks
/// by sampling that the margin is monotone across that bracket, and bisects
/// to `tol`. No sign change over the whole range is an error.
pub fn threshold_solve<F: Fn(f64) -> f64>(margin: F, sweep: SweepSpec) -> Result<f64> {
    let n = sweep.samples.max(8);
    let step = (sweep.hi - sweep.lo) / n as f64;
    let mut prev_x = sweep.lo;
    let mut prev_m = margin(prev_x);
    let mut bracket = None;
    for i in 1..=n {
        let x = sweep.lo + step * i as f64;
        let m = margin(x);
        if prev_m == 0.0 {
            return Ok(prev_x);
        }
        if m == 0.0 {
            return Ok(x);
        }
        if prev_m.signum() != m.signum() {
            bracket = Some((prev_x, x, prev_m));
            break;
        }
        prev_x = x;
        prev_m = m;
    }
    let (mut lo, mut hi, m_lo) = bracket.ok_or(ConditionError::NoSignChange {
        lo: sweep.lo,
        hi: sweep.hi,
    })?;

    // monotonicity near the root, verified by sampling the bracket
    let probes: Vec<f64> = (0..=8).map(|k| margin(lo + (hi - lo) * k as f64 / 8.0)).collect();
    let increasing = probes.windows(2).all(|w| w[1] >= w[0] - 1e-12 * w[0].abs().max(1.0));
    let decreasing = probes.windows(2).all(|w| w[1] <= w[0] + 1e-12 * w[0].abs().max(1.0));
    if !(increasing || decreasing) {
        return Err(ConditionError::InvalidParameter(
            "margin is not monotone across the sign-change bracket".into(),
        ));
    }

    let mut sign_lo = m_lo.signum();
    while hi - lo > sweep.tol {
        let mid = 0.5 * (lo + hi);
        let m = margin(mid);
        if m == 0.0 {
            return Ok(mid);
        }
        if m.signum() == sign_lo {
            lo = mid;
            sign_lo = m.signum();
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
