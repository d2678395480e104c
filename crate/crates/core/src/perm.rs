//! Permutations in one-line notation and the predicates defining the class.
//!
//! Positions are 1-based throughout the public API: `position` in a
//! [`MaxSplit`] and the argument of [`Permutation::at`] count from 1.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a permutation of `1..=word.len()`.
    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok(), "{word:?}");
        Permutation { word }
    }

    /// The identity `(1, 2, ..., n)`.
    pub fn identity(n: usize) -> Result<Self> {
        Permutation::new((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    /// 1-based position of the maximum entry `n`.
    pub fn max_position(&self) -> usize {
        let n = self.len() as u32;
        self.word
            .iter()
            .position(|&v| v == n)
            .expect("valid permutation")
            + 1
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

/// Adjacency bound `m >= 1`: consecutive entries differ by at most `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstraintSpec {
    m: u32,
}

impl ConstraintSpec {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidConstraint);
        }
        Ok(ConstraintSpec { m })
    }

    pub fn m(self) -> u32 {
        self.m
    }
}

/// `pi = left ++ [n] ++ right`, with `position` the 1-based index of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSplit {
    pub left: Vec<u32>,
    pub position: usize,
    pub right: Vec<u32>,
}

impl MaxSplit {
    /// Every entry left of the maximum exceeds every entry right of it.
    /// Vacuously true when either side is empty.
    pub fn is_separated(&self) -> bool {
        match (self.left.iter().min(), self.right.iter().max()) {
            (Some(lo), Some(hi)) => lo > hi,
            _ => true,
        }
    }

    pub fn reassemble(&self) -> Vec<u32> {
        let n = (self.left.len() + self.right.len() + 1) as u32;
        let mut word = Vec::with_capacity(n as usize);
        word.extend_from_slice(&self.left);
        word.push(n);
        word.extend_from_slice(&self.right);
        word
    }
}

/// True iff no `i < j < k` has `p_i < p_k < p_j`.
///
/// Scans left to right keeping, for every earlier position `j`, the open
/// interval `(min(p_1..p_{j-1}), p_j)`; a later entry falling inside one of
/// those intervals closes a 132.
pub fn avoids_132(p: &Permutation) -> bool {
    let word = p.word();
    (1..word.len()).all(|k| prefix_avoids_with(&word[..k], word[k]))
}

/// Largest `|p_{i+1} - p_i|`; zero for `n = 1`.
pub fn max_adjacent_jump(p: &Permutation) -> u32 {
    p.word()
        .windows(2)
        .map(|w| w[0].abs_diff(w[1]))
        .max()
        .unwrap_or(0)
}

pub fn satisfies_adjacency(p: &Permutation, c: ConstraintSpec) -> bool {
    max_adjacent_jump(p) <= c.m()
}

/// Membership in the class: avoids 132 and respects the adjacency bound.
pub fn in_class(p: &Permutation, c: ConstraintSpec) -> bool {
    satisfies_adjacency(p, c) && avoids_132(p)
}

pub fn split_at_max(p: &Permutation) -> MaxSplit {
    let k = p.max_position();
    MaxSplit {
        left: p.word()[..k - 1].to_vec(),
        position: k,
        right: p.word()[k..].to_vec(),
    }
}

/// Whether appending `v` to a class-respecting `prefix` keeps it inside the
/// class: the adjacency bound holds for the new step and no 132 ends at `v`.
pub fn prefix_extension_ok(prefix: &[u32], v: u32, c: ConstraintSpec) -> bool {
    match prefix.last() {
        None => true,
        Some(&last) => last.abs_diff(v) <= c.m() && prefix_avoids_with(prefix, v),
    }
}

/// No `j` with `min(prefix[..j]) < v < prefix[j]`.
fn prefix_avoids_with(prefix: &[u32], v: u32) -> bool {
    let mut running_min = u32::MAX;
    for &x in prefix {
        if running_min < v && v < x {
            return false;
        }
        running_min = running_min.min(x);
    }
    true
}

/// Direct definitions kept independent of the production predicates and
/// used as oracles.
pub mod reference {
    /// O(n^3) scan over all triples.
    pub fn contains_132(word: &[u32]) -> bool {
        let n = word.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if word[i] < word[k] && word[k] < word[j] {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all_words(n: usize) -> Vec<Vec<u32>> {
        fn go(n: u32, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
            if cur.len() == n as usize {
                out.push(cur.clone());
                return;
            }
            for v in 1..=n {
                if !used[v as usize] {
                    used[v as usize] = true;
                    cur.push(v);
                    go(n, cur, used, out);
                    cur.pop();
                    used[v as usize] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(n as u32, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }
}
