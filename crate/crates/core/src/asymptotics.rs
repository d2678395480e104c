//! Leading-order asymptotics of `A_n^(2)`.
//!
//! The dominant pole of `A(x)` is the real root `rho` of `1 - x - x^3`, so
//! `A_n ~ C alpha^n` with `alpha = 1/rho` and
//! `C = (2 rho - 1) / ((1 - rho)^2 (1 + 3 rho^2))`.
//!
//! Exact `A_n` always comes from integer arithmetic; floating point only
//! enters the comparison.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::enumerator::BigCount;
use crate::error::{Error, Result};
use crate::m2::a_counts_via_recurrence;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_REPORT_N: usize = 10_000;

/// Dominant singularity, growth constant and amplitude, each within
/// `tolerance`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticEstimate {
    pub rho: f64,
    pub alpha: f64,
    #[serde(rename = "C")]
    pub amplitude: f64,
    pub tolerance: f64,
}

impl AsymptoticEstimate {
    pub fn compute(tolerance: f64) -> Result<Self> {
        let rho = find_rho(tolerance)?;
        Ok(AsymptoticEstimate {
            rho,
            alpha: 1.0 / rho,
            amplitude: amplitude_c(rho),
            tolerance,
        })
    }

    /// Defining equations of `rho` and `alpha` hold within tolerance.
    pub fn is_consistent(&self) -> bool {
        let (r, a, t) = (self.rho, self.alpha, self.tolerance);
        (1.0 - r - r * r * r).abs() <= t
            && (a * r - 1.0).abs() <= t
            && (a * a * a - a * a - 1.0).abs() <= 10.0 * t
            && self.amplitude > 0.0
    }
}

fn cubic(x: f64) -> f64 {
    1.0 - x - x * x * x
}

/// The root of `1 - x - x^3` in `(0, 1)` with residual below `tolerance`.
///
/// The function is strictly decreasing from 1 at `x = 0` to -1 at `x = 1`,
/// so bisection always brackets the root; Newton polishes the last digits.
pub fn find_rho(tolerance: f64) -> Result<f64> {
    if !(tolerance > 0.0 && tolerance < 1e-6) {
        return Err(Error::Domain(format!(
            "tolerance must lie in (0, 1e-6), got {tolerance}"
        )));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if cubic(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let step = cubic(x) / (-1.0 - 3.0 * x * x);
        x -= step;
        if step.abs() < f64::EPSILON {
            break;
        }
    }
    debug_assert!(cubic(x).abs() < tolerance);
    Ok(x)
}

/// `C = (2 rho - 1) / ((1 - rho)^2 (1 + 3 rho^2))`.
pub fn amplitude_c(rho: f64) -> f64 {
    (2.0 * rho - 1.0) / ((1.0 - rho).powi(2) * (1.0 + 3.0 * rho * rho))
}

/// `ln(C alpha^n)`.
pub fn log_asymptotic_value(n: usize, est: &AsymptoticEstimate) -> f64 {
    est.amplitude.ln() + n as f64 * est.alpha.ln()
}

/// `C alpha^n`, or [`Error::Overflow`] once it leaves binary64 range.
pub fn asymptotic_value(n: usize, est: &AsymptoticEstimate) -> Result<f64> {
    let v = est.amplitude * est.alpha.powi(n as i32);
    if n > i32::MAX as usize || !v.is_finite() {
        return Err(Error::Overflow(n));
    }
    Ok(v)
}

/// Natural log of a positive big integer.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `|exact / (C alpha^n) - 1|`, in linear space while `C alpha^n` is finite
/// and in log space beyond.
pub fn relative_error(exact: &BigUint, n: usize, est: &AsymptoticEstimate) -> f64 {
    match (asymptotic_value(n, est), exact.to_f64()) {
        (Ok(asym), Some(e)) if e.is_finite() => (e / asym - 1.0).abs(),
        _ => (ln_biguint(exact) - log_asymptotic_value(n, est))
            .exp_m1()
            .abs(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub exact: BigCount,
    /// `ln(C alpha^n)`; [`ConvergenceRow::asymptotic_display`] formats it.
    pub ln_asymptotic: f64,
    pub rel_error: f64,
}

impl ConvergenceRow {
    /// `C alpha^n` in scientific notation, valid past the binary64 range.
    pub fn asymptotic_display(&self) -> String {
        let log10 = self.ln_asymptotic / std::f64::consts::LN_10;
        let exp = log10.floor();
        let mantissa = 10f64.powf(log10 - exp);
        format!("{mantissa:.12}e{exp}")
    }
}

/// `(n, A_n, C alpha^n, relative error)` for `n = 1..=n_max`.
pub fn convergence_report(n_max: usize) -> Result<Vec<ConvergenceRow>> {
    if n_max == 0 || n_max > MAX_REPORT_N {
        return Err(Error::Domain(format!(
            "n_max must lie in 1..={MAX_REPORT_N}, got {n_max}"
        )));
    }
    let est = AsymptoticEstimate::compute(DEFAULT_TOLERANCE)?;
    Ok(a_counts_via_recurrence(n_max)
        .into_iter()
        .enumerate()
        .map(|(i, exact)| {
            let n = i + 1;
            ConvergenceRow {
                n,
                rel_error: relative_error(exact.as_biguint(), n, &est),
                ln_asymptotic: log_asymptotic_value(n, &est),
                exact,
            }
        })
        .collect())
}

/// CSV with header `n,exact,asymptotic,rel_error`.
pub fn report_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from("n,exact,asymptotic,rel_error\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{:e}",
            r.n,
            r.exact,
            r.asymptotic_display(),
            r.rel_error
        );
    }
    out
}
