//! Constant-coefficient linear recurrences: representation, verification
//! against data, extraction from a rational generating function, and
//! fitting from raw terms.
//!
//! Sequences are 1-indexed (`seq[0]` is `a_1`) and terms at indices `<= 0`
//! read as zero, so a relation may be valid from any `n >= 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rational::RationalGF;
use crate::error::{Error, Result};

/// `a_n = sum_{i=1..d} c_i a_{n-i}` for every `n >= valid_from`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    coefficients: Vec<BigRational>,
    valid_from: usize,
    initial_terms: Vec<BigInt>,
}

impl LinearRecurrence {
    /// `initial_terms` are `a_1, ..., a_{valid_from - 1}`.
    pub fn new(
        coefficients: Vec<BigRational>,
        valid_from: usize,
        initial_terms: Vec<BigInt>,
    ) -> Result<Self> {
        match coefficients.last() {
            None => return Err(Error::InvalidRecurrence("order must be at least 1".into())),
            Some(c) if c.is_zero() => {
                return Err(Error::InvalidRecurrence("last coefficient is zero".into()))
            }
            _ => {}
        }
        if valid_from == 0 {
            return Err(Error::InvalidRecurrence(
                "valid_from must be at least 1".into(),
            ));
        }
        if initial_terms.len() != valid_from - 1 {
            return Err(Error::InvalidRecurrence(format!(
                "expected {} initial terms, got {}",
                valid_from - 1,
                initial_terms.len()
            )));
        }
        Ok(LinearRecurrence {
            coefficients,
            valid_from,
            initial_terms,
        })
    }

    pub fn from_i64(
        coefficients: &[i64],
        valid_from: usize,
        initial_terms: &[i64],
    ) -> Result<Self> {
        LinearRecurrence::new(
            coefficients
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
            valid_from,
            initial_terms.iter().map(|&t| BigInt::from(t)).collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    pub fn initial_terms(&self) -> &[BigInt] {
        &self.initial_terms
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coefficients
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// `a_1, ..., a_len` generated from the initial terms.
    pub fn terms(&self, len: usize) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = self
            .initial_terms
            .iter()
            .take(len)
            .map(|t| BigRational::from_integer(t.clone()))
            .collect();
        while out.len() < len {
            let n = out.len() + 1;
            let next = self
                .coefficients
                .iter()
                .enumerate()
                .filter(|&(i, _)| n > i + 1)
                .map(|(i, c)| c * &out[n - i - 2])
                .fold(BigRational::zero(), |acc, x| acc + x);
            out.push(next);
        }
        out
    }

    /// Like [`terms`](Self::terms) but `None` if some term is not an integer.
    pub fn integer_terms(&self, len: usize) -> Option<Vec<BigInt>> {
        self.terms(len)
            .into_iter()
            .map(|t| t.is_integer().then(|| t.to_integer()))
            .collect()
    }

    /// Reverse characteristic coefficients as binary64, highest degree first:
    /// `x^d - c_1 x^{d-1} - ... - c_d`.
    pub(crate) fn characteristic_f64(&self) -> Vec<f64> {
        std::iter::once(1.0)
            .chain(
                self.coefficients
                    .iter()
                    .map(|c| -c.to_f64().unwrap_or(f64::NAN)),
            )
            .collect()
    }
}

impl fmt::Debug for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "LinearRecurrence {{ coefficients: [{}], valid_from: {} }}",
            coeffs.join(", "),
            self.valid_from
        )
    }
}

/// `{order, coefficients, valid_from}`; integral coefficients are JSON
/// numbers, others `"p/q"` strings.
impl Serialize for LinearRecurrence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self
            .coefficients
            .iter()
            .map(
                |c| match c.is_integer().then(|| c.to_integer().to_i64()).flatten() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                },
            )
            .collect();
        let mut st = s.serialize_struct("LinearRecurrence", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coefficients", &coeffs)?;
        st.serialize_field("valid_from", &self.valid_from)?;
        st.end()
    }
}

/// `a_k` for 1-based `k`, zero for `k <= 0`.
fn term(seq: &[BigInt], k: isize) -> BigInt {
    if k >= 1 {
        seq[(k - 1) as usize].clone()
    } else {
        BigInt::zero()
    }
}

/// True iff the relation holds at every index from `valid_from` through
/// the end of `seq`.
pub fn verify_recurrence(seq: &[BigInt], rec: &LinearRecurrence) -> bool {
    (rec.valid_from..=seq.len()).all(|n| {
        let predicted =
            rec.coefficients
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (i, c)| {
                    acc + c * BigRational::from_integer(term(seq, n as isize - i as isize - 1))
                });
        predicted == BigRational::from_integer(seq[n - 1].clone())
    })
}

/// Recurrence read off the denominator: `c_i = -q_i / q_0`, valid from
/// `deg P + 1` (pushed to `order + 1` when the series has a nonzero
/// constant term, which the 1-indexed convention cannot see).
pub fn gf_to_recurrence(gf: &RationalGF) -> Result<LinearRecurrence> {
    let q = gf.denominator().coeffs();
    let order = q.len() - 1;
    if order == 0 {
        return Err(Error::InvalidRecurrence(
            "polynomial generating function has no recurrence of order >= 1".into(),
        ));
    }
    let q0 = &q[0];
    let coefficients = q[1..]
        .iter()
        .map(|qi| -BigRational::new(qi.clone(), q0.clone()))
        .collect();
    let mut valid_from = gf.numerator().degree().map_or(1, |d| d + 1);
    let series = gf.series_coeffs(valid_from.max(order + 1))?;
    if !series[0].is_zero() {
        valid_from = valid_from.max(order + 1);
    }
    LinearRecurrence::new(coefficients, valid_from, series[1..valid_from].to_vec())
}

/// Solves `matrix * x = rhs` exactly. `None` unless the system is consistent
/// with a unique solution.
fn solve_unique(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Option<Vec<BigRational>> {
    // rows are [coefficients..., rhs]
    let mut pivot_row = 0;
    for col in 0..unknowns {
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        let inv = BigRational::one() / &rows[pivot_row][col];
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot) {
                *v -= &factor * p;
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    Some(
        rows[..unknowns]
            .iter()
            .map(|row| row[unknowns].clone())
            .collect(),
    )
}

/// Number of trailing terms never used to determine coefficients.
pub const HELD_OUT: usize = 2;

/// Tries one `(order, valid_from)` pair: solve on indices
/// `valid_from..=len-HELD_OUT`, then check every index.
fn try_candidate(seq: &[BigInt], order: usize, valid_from: usize) -> Option<LinearRecurrence> {
    let fit_end = seq.len().checked_sub(HELD_OUT)?;
    if fit_end < valid_from || fit_end + 1 - valid_from < order {
        return None;
    }
    let rows = (valid_from..=fit_end)
        .map(|n| {
            let mut row: Vec<BigRational> = (1..=order)
                .map(|i| BigRational::from_integer(term(seq, n as isize - i as isize)))
                .collect();
            row.push(BigRational::from_integer(seq[n - 1].clone()));
            row
        })
        .collect();
    let coefficients = solve_unique(rows, order)?;
    if coefficients.last()?.is_zero() {
        return None;
    }
    let rec =
        LinearRecurrence::new(coefficients, valid_from, seq[..valid_from - 1].to_vec()).ok()?;
    verify_recurrence(seq, &rec).then_some(rec)
}

/// Minimal fit within bounds, skipping candidates the data cannot support
/// (fewer equations than unknowns before the held-out tail).
pub fn search_recurrence(
    seq: &[BigInt],
    max_order: usize,
    max_offset: usize,
) -> Option<LinearRecurrence> {
    (1..=max_order)
        .find_map(|order| (0..=max_offset).find_map(|offset| try_candidate(seq, order, offset + 1)))
}

/// Minimal-order recurrence (then smallest `valid_from`) satisfied by `seq`
/// from index `offset + 1` on, with `offset <= max_offset`.
///
/// Coefficients come from an exact solve on all indices except the last
/// [`HELD_OUT`], which must then also satisfy the relation. `Ok(None)` means
/// no recurrence exists within the bounds.
pub fn fit_recurrence(
    seq: &[BigInt],
    max_order: usize,
    max_offset: usize,
) -> Result<Option<LinearRecurrence>> {
    let needed = 2 * max_order + max_offset + 2;
    if max_order == 0 || seq.len() < needed {
        return Err(Error::InsufficientData {
            needed: needed.max(4),
            got: seq.len(),
        });
    }
    Ok(search_recurrence(seq, max_order, max_offset))
}
