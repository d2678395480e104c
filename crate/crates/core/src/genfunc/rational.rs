use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::poly::{poly_gcd, IntPolynomial};
use crate::error::{Error, Result};

/// `numerator / denominator` in lowest terms over `Z`, with a denominator
/// whose constant term is positive so the power series at 0 exists.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalGF {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGF {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidGf("zero denominator".into()));
        }
        let g = poly_gcd(&numerator, &denominator);
        let mut num = numerator.div_exact(&g).expect("gcd divides numerator");
        let mut den = denominator.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_zero() && c != BigInt::from(1) {
            num = num.div_exact(&IntPolynomial::constant(c.clone())).unwrap();
            den = den.div_exact(&IntPolynomial::constant(c)).unwrap();
        }
        let q0 = den.coeff(0);
        if q0.is_zero() {
            return Err(Error::InvalidGf(format!(
                "denominator {den} vanishes at 0; no power series expansion"
            )));
        }
        if q0.is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalGF {
            numerator: num,
            denominator: den,
        })
    }

    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        RationalGF::new(
            IntPolynomial::from_i64(numerator),
            IntPolynomial::from_i64(denominator),
        )
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Numerator and denominator share no non-unit factor.
    pub fn is_coprime(&self) -> bool {
        let g = poly_gcd(&self.numerator, &self.denominator);
        g.degree() == Some(0) && g.coeff(0).abs() == BigInt::from(1)
    }

    /// First `count` series coefficients `a_0, ..., a_{count-1}` via
    /// `a_n = (p_n - sum_{i>=1} q_i a_{n-i}) / q_0`.
    ///
    /// Fails if some coefficient is not an integer (possible only when
    /// `q_0 != 1`).
    pub fn series_coeffs(&self, count: usize) -> Result<Vec<BigInt>> {
        let q = self.denominator.coeffs();
        let q0 = &q[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.numerator.coeff(n);
            for (i, qi) in q.iter().enumerate().skip(1).take(n) {
                acc -= qi * &out[n - i];
            }
            let (quot, rem) = acc.div_rem(q0);
            if !rem.is_zero() {
                return Err(Error::InvalidGf(format!(
                    "coefficient of x^{n} is not an integer"
                )));
            }
            out.push(quot);
        }
        Ok(out)
    }
}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: &RationalGF) -> RationalGF {
        let num = &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator);
        let den = &self.denominator * &rhs.denominator;
        RationalGF::new(num, den).expect("product of series-expandable denominators")
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        let num = &self.numerator * &rhs.numerator;
        let den = &self.denominator * &rhs.denominator;
        RationalGF::new(num, den).expect("product of series-expandable denominators")
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF[{self}]")
    }
}

pub fn series_coeffs(gf: &RationalGF, count: usize) -> Result<Vec<BigInt>> {
    gf.series_coeffs(count)
}
