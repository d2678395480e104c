//! Dominant characteristic root of a recurrence.

use num_complex::Complex64;

use super::recurrence::LinearRecurrence;
use crate::error::{Error, Result};

/// Roots closer than this (relative) are one root with multiplicity.
const CLUSTER_TOL: f64 = 1e-5;
const ROOT_TOL: f64 = 1e-12;

/// Horner on real coefficients, highest degree first.
fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn eval_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// All complex roots of a monic polynomial (highest degree first) by
/// Durand-Kerner iteration.
pub(crate) fn all_roots(monic: &[f64]) -> Vec<Complex64> {
    let degree = monic.len() - 1;
    let bound = 1.0 + monic[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| seed.powu(k as u32) * (bound / 2.0).max(0.5))
        .collect();
    for _ in 0..5000 {
        let mut delta = 0.0f64;
        for i in 0..degree {
            let zi = roots[i];
            let denom = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, (_, &zj)| acc * (zi - zj));
            if denom.norm() == 0.0 {
                roots[i] += Complex64::new(1e-9, 1e-9);
                delta = f64::INFINITY;
                continue;
            }
            let step = eval_complex(monic, zi) / denom;
            roots[i] = zi - step;
            delta = delta.max(step.norm() / zi.norm().max(1.0));
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Bisection on a sign-changing bracket, then Newton polishing.
fn refine_real(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = eval(coeffs, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = eval(coeffs, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if hi - lo < ROOT_TOL * 1e-3 {
            break;
        }
    }
    let derivative: Vec<f64> = {
        let d = coeffs.len() - 1;
        coeffs[..d]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (d - i) as f64)
            .collect()
    };
    let mut x = 0.5 * (lo + hi);
    for _ in 0..3 {
        let fp = eval(&derivative, x);
        if fp == 0.0 {
            break;
        }
        let next = x - eval(coeffs, x) / fp;
        if !(next.is_finite() && (next - x).abs() <= (hi - lo).max(ROOT_TOL)) {
            break;
        }
        x = next;
    }
    x
}

/// Largest positive real root of `x^d - c_1 x^{d-1} - ... - c_d`, required
/// to be the unique root of maximal modulus (counted once regardless of
/// multiplicity).
pub fn dominant_root(rec: &LinearRecurrence) -> Result<f64> {
    let monic = rec.characteristic_f64();
    if monic.iter().any(|c| !c.is_finite()) {
        return Err(Error::NoDominantRoot(
            "coefficient not representable as f64".into(),
        ));
    }
    let roots = all_roots(&monic);
    let max_modulus = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let scale = max_modulus.max(1e-300);
    let dominant: Vec<&Complex64> = roots
        .iter()
        .filter(|z| z.norm() >= max_modulus * (1.0 - CLUSTER_TOL))
        .collect();
    let estimate = dominant.iter().map(|z| z.re).sum::<f64>() / dominant.len() as f64;
    let clustered = dominant
        .iter()
        .all(|z| (**z - Complex64::new(estimate, 0.0)).norm() <= CLUSTER_TOL * scale);
    if !clustered || estimate <= 0.0 {
        return Err(Error::NoDominantRoot(format!(
            "roots of maximal modulus {max_modulus:.6} are not a single positive real root: {dominant:?}"
        )));
    }
    let width = (CLUSTER_TOL * scale).max(1e-9);
    let (lo, hi) = (estimate - width, estimate + width);
    let root = if (eval(&monic, lo) < 0.0) != (eval(&monic, hi) < 0.0) {
        refine_real(&monic, lo, hi)
    } else {
        // even multiplicity: no sign change to bracket
        estimate
    };
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(c: &[i64]) -> LinearRecurrence {
        let init = vec![1; c.len()];
        LinearRecurrence::from_i64(c, c.len() + 1, &init).unwrap()
    }

    #[test]
    fn m2_recurrence_root() {
        let alpha = dominant_root(&rec(&[3, -3, 2, -2, 1])).unwrap();
        assert!((alpha - 1.4655712319).abs() < 1e-9, "{alpha}");
        assert!((alpha.powi(3) - alpha.powi(2) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_and_fibonacci() {
        assert_eq!(dominant_root(&rec(&[1])).unwrap(), 1.0);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((dominant_root(&rec(&[1, 1])).unwrap() - phi).abs() < 1e-12);
    }

    #[test]
    fn double_root_is_accepted() {
        // a_n = 2a_{n-1} - a_{n-2}: characteristic (x - 1)^2
        let r = dominant_root(&rec(&[2, -1])).unwrap();
        assert!((r - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rejects_ties_and_negative_dominance() {
        // x^2 - 1: roots +-1 share the maximal modulus
        assert!(dominant_root(&rec(&[0, 1])).is_err());
        // x + 2: dominant root -2
        assert!(dominant_root(&rec(&[-2])).is_err());
        // x^2 + 1: purely imaginary pair
        assert!(dominant_root(&rec(&[0, -1])).is_err());
    }

    #[test]
    fn roots_of_a_known_product() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let mut roots: Vec<f64> = all_roots(&[1.0, 0.0, -7.0, 6.0])
            .iter()
            .map(|z| z.re)
            .collect();
        roots.sort_by(f64::total_cmp);
        for (got, want) in roots.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }
}
