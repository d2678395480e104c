//! Brute-force ground truth for the class `A_n^(m)`.
//!
//! Backtracking over one-line words with [`prefix_extension_ok`] pruning.
//! Nothing here uses structural results about the class; those are only
//! checked against this module's output.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{prefix_extension_ok, ConstraintSpec, Permutation};

/// Environment variable overriding the default ceiling.
pub const CEILING_ENV: &str = "PERMLIP_CEILING";
pub const DEFAULT_CEILING: usize = 14;

/// Exact nonnegative count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BigUint::from_str(s)
            .map(BigCount)
            .map_err(|e| Error::Domain(format!("not a nonnegative integer: {s:?} ({e})")))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

/// Counts are emitted as decimal strings; they outgrow every fixed-width
/// integer and IEEE-754's exact range.
impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

/// Which of the `m = 2` subclasses a permutation falls in, by position of
/// its maximum: first (`B`), second (`C`), last (`D`), elsewhere (`None`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    B,
    C,
    D,
    None,
}

impl ClassLabel {
    /// Only defined for `n >= 3`; at `n = 2` positions 2 and `n` coincide.
    pub fn of(p: &Permutation) -> Result<ClassLabel> {
        let n = p.len();
        if n < 3 {
            return Err(Error::Domain(format!(
                "B/C/D labels are defined for n >= 3, got n = {n}"
            )));
        }
        Ok(match p.max_position() {
            1 => ClassLabel::B,
            2 => ClassLabel::C,
            k if k == n => ClassLabel::D,
            _ => ClassLabel::None,
        })
    }
}

/// Number of class members by 1-based position of the maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionCensus {
    pub n: usize,
    pub counts: BTreeMap<usize, BigCount>,
}

impl PositionCensus {
    /// Positions with a nonzero count.
    pub fn support(&self) -> Vec<usize> {
        self.counts
            .iter()
            .filter(|(_, c)| !c.0.is_zero())
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn total(&self) -> BigCount {
        self.counts
            .values()
            .fold(BigCount::zero(), |acc, c| &acc + c)
    }

    pub fn get(&self, k: usize) -> BigCount {
        self.counts.get(&k).cloned().unwrap_or_default()
    }
}

/// Members of the `m = 2` class at one `n`, split by maximum position.
#[derive(Clone, Debug, Default)]
pub struct M2Classes {
    pub b: Vec<Permutation>,
    pub c: Vec<Permutation>,
    pub d: Vec<Permutation>,
    pub other: Vec<Permutation>,
}

/// Backtracking counter and enumerator with a configurable size ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    ceiling: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl BruteForce {
    pub fn with_ceiling(ceiling: usize) -> Self {
        BruteForce { ceiling }
    }

    /// Reads `PERMLIP_CEILING`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CEILING_ENV) {
            Ok(v) => v.trim().parse().map(BruteForce::with_ceiling).map_err(|_| {
                Error::Domain(format!("{CEILING_ENV}={v:?} is not a nonnegative integer"))
            }),
            Err(_) => Ok(BruteForce::default()),
        }
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if n > self.ceiling {
            return Err(Error::CeilingExceeded {
                n,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    /// `|A_n^(m)|`.
    pub fn count(&self, n: usize, c: ConstraintSpec) -> Result<BigCount> {
        self.check(n)?;
        let total: u64 = (1..=n as u32)
            .into_par_iter()
            .map(|first| {
                let mut k = 0u64;
                walk_branch(n, c, first, &mut |_| k += 1);
                k
            })
            .sum();
        Ok(BigCount::from(total))
    }

    /// All members of `A_n^(m)` in lexicographic order.
    pub fn enumerate(&self, n: usize, c: ConstraintSpec) -> Result<Vec<Permutation>> {
        self.check(n)?;
        let branches: Vec<Vec<Permutation>> = (1..=n as u32)
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                walk_branch(n, c, first, &mut |w| {
                    out.push(Permutation::from_word_unchecked(w.to_vec()))
                });
                out
            })
            .collect();
        Ok(branches.into_iter().flatten().collect())
    }

    pub fn max_position_census(&self, n: usize, c: ConstraintSpec) -> Result<PositionCensus> {
        self.check(n)?;
        let by_position = (1..=n as u32)
            .into_par_iter()
            .map(|first| {
                let mut local = vec![0u64; n + 1];
                walk_branch(n, c, first, &mut |w| {
                    let k = w.iter().position(|&v| v as usize == n).unwrap() + 1;
                    local[k] += 1;
                });
                local
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        let counts = (1..=n)
            .map(|k| (k, BigCount::from(by_position[k])))
            .collect();
        Ok(PositionCensus { n, counts })
    }

    /// Members of `A_n^(2)` grouped by [`ClassLabel`], each group in
    /// lexicographic order.
    pub fn classify_m2(&self, n: usize) -> Result<M2Classes> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "the B/C/D partition is defined for n >= 3, got n = {n}"
            )));
        }
        let two = ConstraintSpec::new(2)?;
        let mut classes = M2Classes::default();
        for p in self.enumerate(n, two)? {
            match ClassLabel::of(&p)? {
                ClassLabel::B => classes.b.push(p),
                ClassLabel::C => classes.c.push(p),
                ClassLabel::D => classes.d.push(p),
                ClassLabel::None => classes.other.push(p),
            }
        }
        Ok(classes)
    }

    /// `(|B_n|, |C_n|, |D_n|)` for `m = 2`.
    pub fn classify_counts_m2(&self, n: usize) -> Result<(BigCount, BigCount, BigCount)> {
        let classes = self.classify_m2(n)?;
        let size = |v: &Vec<Permutation>| BigCount::from(v.len() as u64);
        Ok((size(&classes.b), size(&classes.c), size(&classes.d)))
    }
}

/// Depth-first walk of all class members starting with `first`, visiting
/// complete words in lexicographic order.
fn walk_branch(n: usize, c: ConstraintSpec, first: u32, visit: &mut impl FnMut(&[u32])) {
    fn go(
        n: usize,
        c: ConstraintSpec,
        word: &mut Vec<u32>,
        used: &mut [bool],
        visit: &mut impl FnMut(&[u32]),
    ) {
        if word.len() == n {
            visit(word);
            return;
        }
        let last = *word.last().unwrap();
        let lo = last.saturating_sub(c.m()).max(1);
        let hi = last.saturating_add(c.m()).min(n as u32);
        for v in lo..=hi {
            if used[v as usize] || !prefix_extension_ok(word, v, c) {
                continue;
            }
            used[v as usize] = true;
            word.push(v);
            go(n, c, word, used, visit);
            word.pop();
            used[v as usize] = false;
        }
    }

    let mut used = vec![false; n + 1];
    used[first as usize] = true;
    let mut word = Vec::with_capacity(n);
    word.push(first);
    go(n, c, &mut word, &mut used, visit);
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigCount {
    // binom(2n, n) built incrementally; every partial product is itself a
    // binomial coefficient, so each division is exact.
    let mut binom = BigUint::one();
    for i in 1..=n {
        binom *= BigUint::from(n + i);
        binom /= BigUint::from(i);
    }
    BigCount(binom / BigUint::from(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::reference::{all_words, contains_132};

    fn m(m: u32) -> ConstraintSpec {
        ConstraintSpec::new(m).unwrap()
    }

    fn bf() -> BruteForce {
        BruteForce::default()
    }

    fn words(ps: &[Permutation]) -> Vec<Vec<u32>> {
        ps.iter().map(|p| p.word().to_vec()).collect()
    }

    /// Filter of all of `S_n` by the direct definitions.
    fn filter_oracle(n: usize, bound: u32) -> Vec<Vec<u32>> {
        all_words(n)
            .into_iter()
            .filter(|w| !contains_132(w) && w.windows(2).all(|p| p[0].abs_diff(p[1]) <= bound))
            .collect()
    }

    #[test]
    fn count_examples() {
        assert_eq!(bf().count(3, m(2)).unwrap(), 5);
        assert_eq!(bf().count(6, m(2)).unwrap(), 18);
        assert_eq!(bf().count(2, m(1)).unwrap(), 2);
        assert_eq!(bf().count(4, m(3)).unwrap(), 14);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            words(&bf().enumerate(3, m(2)).unwrap()),
            vec![
                vec![1, 2, 3],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        for bound in 1..4 {
            assert_eq!(words(&bf().enumerate(1, m(bound)).unwrap()), vec![vec![1]]);
        }
        assert_eq!(
            words(&bf().enumerate(2, m(1)).unwrap()),
            vec![vec![1, 2], vec![2, 1]]
        );
    }

    #[test]
    fn enumeration_matches_filter_of_symmetric_group() {
        for n in 1..=8 {
            for bound in 1..=4 {
                assert_eq!(
                    words(&bf().enumerate(n, m(bound)).unwrap()),
                    filter_oracle(n, bound)
                );
            }
        }
    }

    #[test]
    fn ceiling_is_enforced() {
        let small = BruteForce::with_ceiling(5);
        assert_eq!(
            small.count(6, m(2)),
            Err(Error::CeilingExceeded { n: 6, ceiling: 5 })
        );
        assert!(small.enumerate(6, m(2)).is_err());
        assert!(small.max_position_census(6, m(2)).is_err());
        assert!(small.count(0, m(2)).is_err());
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), 1);
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(10), 16796);
        // Segner recurrence as an independent route.
        let mut seg = vec![BigUint::one()];
        for n in 1..=30usize {
            let next = (0..n).map(|i| &seg[i] * &seg[n - 1 - i]).sum();
            seg.push(next);
        }
        for (n, expected) in seg.iter().enumerate() {
            assert_eq!(&catalan(n).0, expected);
        }
    }

    #[test]
    fn census_examples() {
        let census = bf().max_position_census(3, m(2)).unwrap();
        assert_eq!(census.get(1), 2);
        assert_eq!(census.get(2), 1);
        assert_eq!(census.get(3), 2);

        let census = bf().max_position_census(1, m(5)).unwrap();
        assert_eq!(census.support(), vec![1]);
        assert_eq!(census.get(1), 1);

        let census = bf().max_position_census(6, m(2)).unwrap();
        assert_eq!(census.support(), vec![1, 2, 6]);
        assert_eq!(census.total(), 18);
        assert_eq!(
            (census.get(1), census.get(2), census.get(6)),
            (9.into(), 4.into(), 5.into())
        );
    }

    #[test]
    fn classify_examples() {
        let tuple = |n| {
            let (b, c, d) = bf().classify_counts_m2(n).unwrap();
            (
                b.to_u64().unwrap(),
                c.to_u64().unwrap(),
                d.to_u64().unwrap(),
            )
        };
        assert_eq!(tuple(3), (2, 1, 2));
        assert_eq!(tuple(4), (4, 1, 3));
        assert_eq!(tuple(6), (9, 4, 5));
        let classes = bf().classify_m2(3).unwrap();
        assert_eq!(words(&classes.b), vec![vec![3, 1, 2], vec![3, 2, 1]]);
        assert_eq!(words(&classes.c), vec![vec![2, 3, 1]]);
        assert_eq!(words(&classes.d), vec![vec![1, 2, 3], vec![2, 1, 3]]);
    }

    #[test]
    fn classify_rejects_small_n() {
        assert!(matches!(bf().classify_counts_m2(2), Err(Error::Domain(_))));
        assert!(ClassLabel::of(&Permutation::new(vec![2, 1]).unwrap()).is_err());
    }

    #[test]
    fn count_is_monotone_in_m() {
        for n in 1..=10 {
            let counts: Vec<BigCount> = (1..=9).map(|b| bf().count(n, m(b)).unwrap()).collect();
            assert!(counts.windows(2).all(|w| w[0] <= w[1]), "n={n}: {counts:?}");
        }
    }

    #[test]
    fn m1_class_has_two_members() {
        for n in 2..=12 {
            assert_eq!(bf().count(n, m(1)).unwrap(), 2);
        }
    }

    #[test]
    fn serializes_as_string() {
        let json = serde_json::to_string(&BigCount::from(18)).unwrap();
        assert_eq!(json, "\"18\"");
    }
}
