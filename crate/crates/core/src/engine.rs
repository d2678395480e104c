//! Interchangeable ways of computing `|A_n^(m)|`.
//!
//! Brute force works for every `m` up to the enumeration ceiling. The exact
//! engines (closed form, recurrence, generating function) exist only where
//! the count is known in closed form: `m = 1`, `m = 2`, and the Catalan
//! regime `m >= n - 1`, where the adjacency bound never binds.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::enumerator::{catalan, BigCount, BruteForce};
use crate::error::{Error, Result};
use crate::genfunc::{catalan_series, gf_a, gf_m1, LinearRecurrence, RationalGF};
use crate::m2;
use crate::perm::ConstraintSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Brute,
    Closed,
    Recurrence,
    Gf,
}

impl Engine {
    pub const ALL: [Engine; 4] = [
        Engine::Brute,
        Engine::Closed,
        Engine::Recurrence,
        Engine::Gf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Closed => "closed",
            Engine::Recurrence => "recurrence",
            Engine::Gf => "gf",
        }
    }

    /// Whether this engine can produce `A_1..A_{n_max}` for bound `m`.
    pub fn supports(self, m: u32, n_max: usize) -> bool {
        self == Engine::Brute || m <= 2 || m as usize + 1 >= n_max
    }

    /// The closed form where one exists, brute force otherwise.
    pub fn preferred(m: u32, n_max: usize) -> Engine {
        if Engine::Closed.supports(m, n_max) {
            Engine::Closed
        } else {
            Engine::Brute
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown engine {s:?}")))
    }
}

fn to_count(x: BigInt) -> Result<BigCount> {
    x.to_biguint()
        .map(BigCount)
        .ok_or_else(|| Error::InvalidGf(format!("negative coefficient {x}")))
}

fn series_terms(gf: &RationalGF, n_max: usize) -> Result<Vec<BigCount>> {
    gf.series_coeffs(n_max + 1)?
        .into_iter()
        .skip(1)
        .map(to_count)
        .collect()
}

fn recurrence_terms(rec: &LinearRecurrence, n_max: usize) -> Result<Vec<BigCount>> {
    rec.integer_terms(n_max)
        .ok_or_else(|| Error::InvalidRecurrence("non-integral term".into()))?
        .into_iter()
        .map(to_count)
        .collect()
}

/// `C_1..C_{n_max}` by Segner's convolution `C_{k+1} = sum C_i C_{k-i}`.
fn segner(n_max: usize) -> Vec<BigCount> {
    let mut c: Vec<BigUint> = vec![BigUint::from(1u32)];
    for k in 0..n_max {
        let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
        c.push(next);
    }
    c.into_iter().skip(1).map(BigCount).collect()
}

/// `A_1^(m), ..., A_{n_max}^(m)` computed by `engine`.
pub fn sequence(engine: Engine, m: u32, n_max: usize, bf: &BruteForce) -> Result<Vec<BigCount>> {
    let spec = ConstraintSpec::new(m)?;
    if n_max == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if !engine.supports(m, n_max) {
        return Err(Error::Domain(format!(
            "engine {engine} needs m in {{1, 2}} or m >= n - 1 (m = {m}, n = {n_max})"
        )));
    }
    match (engine, m) {
        (Engine::Brute, _) => (1..=n_max).map(|n| bf.count(n, spec)).collect(),
        (Engine::Closed, 1) => Ok((1..=n_max)
            .map(|n| BigCount::from(if n == 1 { 1 } else { 2 }))
            .collect()),
        (Engine::Recurrence, 1) => {
            recurrence_terms(&LinearRecurrence::from_i64(&[1], 3, &[1, 2])?, n_max)
        }
        (Engine::Gf, 1) => series_terms(&gf_m1(), n_max),
        (Engine::Closed, 2) => Ok(m2::a_counts(n_max)),
        (Engine::Recurrence, 2) => Ok(m2::a_counts_via_recurrence(n_max)),
        (Engine::Gf, 2) => series_terms(&gf_a(), n_max),
        (Engine::Closed, _) => Ok((1..=n_max).map(catalan).collect()),
        (Engine::Recurrence, _) => Ok(segner(n_max)),
        (Engine::Gf, _) => catalan_series(n_max + 1)
            .into_iter()
            .skip(1)
            .map(to_count)
            .collect(),
    }
}

/// `A_n^(m)` computed by `engine`.
pub fn count(engine: Engine, n: usize, m: u32, bf: &BruteForce) -> Result<BigCount> {
    let spec = ConstraintSpec::new(m)?;
    if engine == Engine::Brute {
        return bf.count(n, spec);
    }
    if !engine.supports(m, n) {
        return Err(Error::Domain(format!(
            "engine {engine} needs m in {{1, 2}} or m >= n - 1 (m = {m}, n = {n})"
        )));
    }
    // Catalan regime for larger m: only the single term is needed.
    if m > 2 && engine == Engine::Closed {
        return Ok(catalan(n));
    }
    Ok(sequence(engine, m, n, bf)?.pop().expect("n >= 1"))
}
