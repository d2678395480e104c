//! Exact rational generating functions and C-finite recurrences.
//!
//! All arithmetic is over big integers or exact rationals; binary64 only
//! appears in [`dominant_root`].

mod poly;
mod rational;
mod recurrence;
mod roots;

pub use poly::{poly_add, poly_gcd, poly_mul, IntPolynomial};
pub use rational::{series_coeffs, RationalGF};
pub use recurrence::{
    fit_recurrence, gf_to_recurrence, search_recurrence, verify_recurrence, LinearRecurrence,
    HELD_OUT,
};
pub use roots::dominant_root;

use num_bigint::BigInt;

/// `B(x) = x(1 - x + x^2) / ((1 - x)(1 - x - x^3))`, the series of `|B_n|`.
pub fn gf_b() -> RationalGF {
    RationalGF::from_i64(&[0, 1, -1, 1], &[1, -2, 1, -1, 1]).expect("valid")
}

/// `A(x) = (x - x^2 + 2x^3 - 3x^4 + x^5 - x^6) / ((1 - x)^2 (1 - x - x^3))`,
/// the series of `A_n^(2)`.
pub fn gf_a() -> RationalGF {
    RationalGF::from_i64(&[0, 1, -1, 2, -3, 1, -1], &[1, -3, 3, -2, 2, -1]).expect("valid")
}

/// `(x + x^2) / (1 - x)`, the series of `A_n^(1)`: 1, 2, 2, 2, ...
pub fn gf_m1() -> RationalGF {
    RationalGF::from_i64(&[0, 1, 1], &[1, -1]).expect("valid")
}

/// `(1 + x^2) B(x) + x^2 / (1 - x)^2`, assembled from the subclass series.
pub fn gf_a_from_b() -> RationalGF {
    let one_plus_x2 = RationalGF::from_i64(&[1, 0, 1], &[1]).expect("valid");
    let tail = RationalGF::from_i64(&[0, 0, 1], &[1, -2, 1]).expect("valid");
    &(&one_plus_x2 * &gf_b()) + &tail
}

/// `C_0, ..., C_{count-1}` from the functional equation `C(x) = 1 + x C(x)^2`
/// by fixed-point iteration on truncated series.
pub fn catalan_series(count: usize) -> Vec<BigInt> {
    let mut c = IntPolynomial::one();
    for _ in 0..count {
        let sq = (&c * &c).truncate(count.saturating_sub(1));
        c = &IntPolynomial::one() + &sq.shift(1);
    }
    (0..count).map(|i| c.coeff(i)).collect()
}

/// The `m = 2` recurrence `(3, -3, 2, -2, 1)` valid from `n = 7`.
pub fn m2_recurrence() -> LinearRecurrence {
    LinearRecurrence::from_i64(&[3, -3, 2, -2, 1], 7, &[1, 2, 5, 8, 12, 18]).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::catalan;
    use crate::m2::{a_counts, b_counts};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gf_b_coefficients() {
        assert_eq!(gf_b().numerator(), &IntPolynomial::from_i64(&[0, 1, -1, 1]));
        assert_eq!(
            gf_b().denominator(),
            &IntPolynomial::from_i64(&[1, -2, 1, -1, 1])
        );
        let s = gf_b().series_coeffs(8).unwrap();
        assert_eq!(s, ints(&[0, 1, 1, 2, 4, 6, 9, 14]));
    }

    #[test]
    fn gf_a_coefficients() {
        let a = gf_a();
        assert!(a.is_coprime());
        let s = a.series_coeffs(8).unwrap();
        assert_eq!(s, ints(&[0, 1, 2, 5, 8, 12, 18, 26]));
    }

    #[test]
    fn denominator_expands_as_factored() {
        let factored =
            &IntPolynomial::from_i64(&[1, -1]).pow(2) * &IntPolynomial::from_i64(&[1, -1, 0, -1]);
        assert_eq!(gf_a().denominator(), &factored);
    }

    #[test]
    fn assembly_from_subclasses() {
        assert_eq!(gf_a_from_b(), gf_a());
    }

    #[test]
    fn series_matches_closed_form() {
        let s = gf_a().series_coeffs(1001).unwrap();
        let closed: Vec<BigInt> = a_counts(1000)
            .into_iter()
            .map(|c| BigInt::from(c.0))
            .collect();
        assert_eq!(&s[1..], &closed[..]);
        let b: Vec<BigInt> = b_counts(300)
            .into_iter()
            .map(|c| BigInt::from(c.0))
            .collect();
        assert_eq!(&gf_b().series_coeffs(301).unwrap()[1..], &b[..]);
    }

    #[test]
    fn q_times_series_is_p() {
        let n = 60;
        let a = gf_a();
        let series = IntPolynomial::new(a.series_coeffs(n).unwrap());
        let diff = &(a.denominator() * &series) - a.numerator();
        let dq = a.denominator().degree().unwrap();
        assert!((0..n).all(|i| i >= n - dq || diff.coeff(i) == BigInt::from(0)));
    }

    #[test]
    fn m1_series() {
        assert_eq!(gf_m1().series_coeffs(5).unwrap(), ints(&[0, 1, 2, 2, 2]));
    }

    #[test]
    fn catalan_functional_equation() {
        let s = catalan_series(25);
        for (n, c) in s.iter().enumerate() {
            assert_eq!(c, &BigInt::from(catalan(n).0));
        }
    }

    #[test]
    fn m2_recurrence_root() {
        let alpha = dominant_root(&m2_recurrence()).unwrap();
        assert!((alpha - 1.4655712319).abs() < 1e-9);
    }
}
