//! Growth profiles for arbitrary `m`: exact terms from the enumerator, a
//! fitted constant-coefficient recurrence when the data admits one, and a
//! growth-constant estimate.
//!
//! Only termwise monotonicity in `m` and the Catalan regime `m >= n - 1` are
//! checked as facts; statements about growth constants are reported.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::enumerator::{catalan, BigCount, BruteForce};
use crate::error::{Error, Result};
use crate::genfunc::{dominant_root, search_recurrence, verify_recurrence, LinearRecurrence};
use crate::perm::ConstraintSpec;

/// Search bounds handed to the recurrence fitter. Candidates the data
/// cannot support are skipped rather than rejected.
pub const PROBE_MAX_ORDER: usize = 12;
pub const PROBE_MAX_OFFSET: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EstimateMethod {
    /// Dominant root of the fitted recurrence.
    FittedRoot,
    /// `A_{n_max} / A_{n_max - 1}`; low confidence.
    RatioExtrapolation,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthProfile {
    pub m: u32,
    pub n_max: usize,
    pub terms: Vec<BigCount>,
    pub fitted: Option<LinearRecurrence>,
    pub alpha_estimate: Option<f64>,
    pub method: EstimateMethod,
    pub low_confidence: bool,
}

impl GrowthProfile {
    pub fn terms_as_bigint(&self) -> Vec<BigInt> {
        self.terms
            .iter()
            .map(|t| BigInt::from(t.0.clone()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }
}

/// Terms `A_1..A_{n_max}` of `A^(m)` by brute force, plus fit and estimate.
pub fn build_profile(m: u32, n_max: usize, bf: &BruteForce) -> Result<GrowthProfile> {
    let c = ConstraintSpec::new(m)?;
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let terms = (1..=n_max)
        .map(|n| bf.count(n, c))
        .collect::<Result<Vec<_>>>()?;
    let seq: Vec<BigInt> = terms.iter().map(|t| BigInt::from(t.0.clone())).collect();
    let fitted = search_recurrence(&seq, PROBE_MAX_ORDER, PROBE_MAX_OFFSET);
    debug_assert!(fitted.as_ref().is_none_or(|r| verify_recurrence(&seq, r)));

    let root = fitted.as_ref().and_then(|r| dominant_root(r).ok());
    let (alpha_estimate, method) = match root {
        Some(alpha) => (Some(alpha), EstimateMethod::FittedRoot),
        None => (ratio_estimate(&terms), EstimateMethod::RatioExtrapolation),
    };
    Ok(GrowthProfile {
        m,
        n_max,
        terms,
        fitted,
        alpha_estimate,
        low_confidence: method == EstimateMethod::RatioExtrapolation,
        method,
    })
}

fn ratio_estimate(terms: &[BigCount]) -> Option<f64> {
    let [.., prev, last] = terms else { return None };
    Some(last.0.to_f64()? / prev.0.to_f64()?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityReport {
    /// `A_n^(m) <= A_n^(m')` for every consecutive pair and shared `n`.
    pub termwise_monotone: bool,
    /// First `(m, n)` with `A_n^(m) > A_n^(m_next)`.
    pub first_violation: Option<(u32, usize)>,
    /// `A_n^(m) = C_n` wherever `m >= n - 1`.
    pub catalan_regime_ok: bool,
    /// Estimated growth constants strictly increase in `m`; `None` when some
    /// profile has no estimate.
    pub alphas_increasing: Option<bool>,
    pub alphas_below_four: Option<bool>,
}

impl MonotonicityReport {
    /// The provable parts hold.
    pub fn facts_hold(&self) -> bool {
        self.termwise_monotone && self.catalan_regime_ok
    }

    /// Human-readable lines for the conjecture-level observations.
    pub fn observations(&self) -> Vec<String> {
        let describe = |v: Option<bool>| match v {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "n/a",
        };
        vec![
            format!(
                "alpha estimates strictly increasing in m: {}",
                describe(self.alphas_increasing)
            ),
            format!(
                "alpha estimates below 4: {}",
                describe(self.alphas_below_four)
            ),
        ]
    }
}

/// Profiles must share `n_max` and have strictly ascending `m`.
pub fn monotonicity_check(profiles: &[GrowthProfile]) -> Result<MonotonicityReport> {
    if let Some(first) = profiles.first() {
        if profiles.iter().any(|p| p.n_max != first.n_max) {
            return Err(Error::Domain("profiles must share n_max".into()));
        }
        if profiles.windows(2).any(|w| w[0].m >= w[1].m) {
            return Err(Error::Domain(
                "profiles must have strictly ascending m".into(),
            ));
        }
    }
    let first_violation = profiles.windows(2).find_map(|w| {
        w[0].terms
            .iter()
            .zip(&w[1].terms)
            .position(|(a, b)| a > b)
            .map(|i| (w[0].m, i + 1))
    });
    let catalan_regime_ok = profiles.iter().all(|p| {
        p.terms
            .iter()
            .enumerate()
            .filter(|&(i, _)| p.m as usize + 2 > i + 1)
            .all(|(i, t)| *t == catalan(i + 1))
    });
    let alphas: Option<Vec<f64>> = profiles.iter().map(|p| p.alpha_estimate).collect();
    Ok(MonotonicityReport {
        termwise_monotone: first_violation.is_none(),
        first_violation,
        catalan_regime_ok,
        alphas_increasing: alphas.as_ref().map(|a| a.windows(2).all(|w| w[0] < w[1])),
        alphas_below_four: alphas.as_ref().map(|a| a.iter().all(|&x| x < 4.0)),
    })
}
