//! Exact structure of the `m = 2` class.
//!
//! For `n >= 3` the maximum sits in position 1, 2 or `n`, splitting the
//! class into `B_n`, `C_n` and `D_n`:
//!
//! * `D_n` has exactly `n - 1` members, one per Type A / Type B prefix.
//! * Dropping the first two entries maps `C_n` bijectively onto `B_{n-2}`.
//! * `B_n` is `n` prepended to `B_{n-1}`, `(n, n-2, n-1)` prepended to
//!   `B_{n-3}`, plus the single zigzag `omega_n`, giving
//!   `|B_n| = |B_{n-1}| + |B_{n-3}| + 1`.
//!
//! Everything here is constructive; the brute-force enumerator is the
//! independent check.

use num_bigint::BigUint;

use crate::enumerator::BigCount;
use crate::error::{Error, Result};
use crate::perm::{in_class, ConstraintSpec, Permutation};

/// First six terms of `A_n^(2)`, `n = 1..=6`.
pub const A_INITIAL: [u64; 6] = [1, 2, 5, 8, 12, 18];

/// `A_n = 3A_{n-1} - 3A_{n-2} + 2A_{n-3} - 2A_{n-4} + A_{n-5}`, `n >= 7`.
pub const A_RECURRENCE: [i64; 5] = [3, -3, 2, -2, 1];

/// The two prefix shapes of a `D_n` member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DnKind {
    /// Odd values `2p-1, 2p-3, ..., 1`.
    A,
    /// Even values `2p, 2p-2, ..., 2` followed by `1`.
    B,
}

/// A `D_n` prefix type with its index `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnType {
    pub kind: DnKind,
    pub p: usize,
}

impl DnType {
    pub fn new(kind: DnKind, p: usize, n: usize) -> Result<Self> {
        let max = match kind {
            DnKind::A => n / 2,
            DnKind::B => n.saturating_sub(1) / 2,
        };
        if n < 2 || p == 0 || p > max {
            return Err(Error::IndexOutOfRange { p, n, max });
        }
        Ok(DnType { kind, p })
    }

    pub fn build(self, n: usize) -> Result<Permutation> {
        match self.kind {
            DnKind::A => make_type_a(n, self.p),
            DnKind::B => make_type_b(n, self.p),
        }
    }
}

/// Completes a descending prefix with the unused values of `1..n` in
/// ascending order, then `n`.
fn complete_with_suffix(n: usize, mut prefix: Vec<u32>) -> Permutation {
    let mut used = vec![false; n + 1];
    for &v in &prefix {
        used[v as usize] = true;
    }
    prefix.extend((1..n as u32).filter(|&v| !used[v as usize]));
    prefix.push(n as u32);
    Permutation::from_word_unchecked(prefix)
}

/// `(2p-1, 2p-3, ..., 1, <rest ascending>, n)`.
pub fn make_type_a(n: usize, p: usize) -> Result<Permutation> {
    DnType::new(DnKind::A, p, n)?;
    let prefix = (1..=p).rev().map(|i| (2 * i - 1) as u32).collect();
    Ok(complete_with_suffix(n, prefix))
}

/// `(2p, 2p-2, ..., 2, 1, <rest ascending>, n)`.
pub fn make_type_b(n: usize, p: usize) -> Result<Permutation> {
    DnType::new(DnKind::B, p, n)?;
    let mut prefix: Vec<u32> = (1..=p).rev().map(|i| (2 * i) as u32).collect();
    prefix.push(1);
    Ok(complete_with_suffix(n, prefix))
}

/// All of `D_n`: Type A for `p = 1..=n/2`, then Type B for `p = 1..=(n-1)/2`.
pub fn enumerate_d(n: usize) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(Error::Domain(format!("D_n is defined for n >= 2, got {n}")));
    }
    let a = (1..=n / 2).map(|p| make_type_a(n, p));
    let b = (1..=(n - 1) / 2).map(|p| make_type_b(n, p));
    a.chain(b).collect()
}

pub fn d_count(n: usize) -> Result<BigCount> {
    if n < 2 {
        return Err(Error::Domain(format!("D_n is defined for n >= 2, got {n}")));
    }
    Ok(BigCount::from(n as u64 - 1))
}

/// `|B_1|, ..., |B_n|` (index 0 holds `|B_1|`).
pub fn b_counts(n: usize) -> Vec<BigCount> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n);
    for i in 1..=n {
        let next = match i {
            1 | 2 => BigUint::from(1u32),
            3 => BigUint::from(2u32),
            _ => &table[i - 2] + &table[i - 4] + 1u32,
        };
        table.push(next);
    }
    table.into_iter().map(BigCount).collect()
}

pub fn b_count(n: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::Domain("B_n is defined for n >= 1".into()));
    }
    Ok(b_counts(n).pop().unwrap())
}

/// `|C_n| = |B_{n-2}|`.
pub fn c_count(n: usize) -> Result<BigCount> {
    if n < 3 {
        return Err(Error::Domain(format!("C_n is defined for n >= 3, got {n}")));
    }
    b_count(n - 2)
}

/// `A_1, ..., A_n` from `A_n = |B_n| + |B_{n-2}| + (n - 1)`, with the first
/// two terms taken from the table.
pub fn a_counts(n: usize) -> Vec<BigCount> {
    let b = b_counts(n);
    (1..=n)
        .map(|i| match i {
            1 | 2 => BigCount::from(A_INITIAL[i - 1]),
            _ => BigCount(&b[i - 1].0 + &b[i - 3].0 + (i as u64 - 1)),
        })
        .collect()
}

pub fn a_count(n: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::Domain("A_n is defined for n >= 1".into()));
    }
    Ok(a_counts(n).pop().unwrap())
}

/// `A_1, ..., A_n` from the order-5 recurrence and the six initial values.
pub fn a_counts_via_recurrence(n: usize) -> Vec<BigCount> {
    let mut terms: Vec<BigUint> = A_INITIAL
        .iter()
        .take(n)
        .map(|&v| BigUint::from(v))
        .collect();
    while terms.len() < n {
        let k = terms.len();
        // 3a - 3b + 2c - 2d + e, grouped so every partial result stays nonnegative:
        // a - b > 0 and c > d for this sequence.
        let (a, b, c, d, e) = (
            &terms[k - 1],
            &terms[k - 2],
            &terms[k - 3],
            &terms[k - 4],
            &terms[k - 5],
        );
        let next = (a - b) * 3u32 + (c - d) * 2u32 + e;
        terms.push(next);
    }
    terms.into_iter().map(BigCount).collect()
}

pub fn a_count_via_recurrence(n: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::Domain("A_n is defined for n >= 1".into()));
    }
    Ok(a_counts_via_recurrence(n).pop().unwrap())
}

/// The zigzag `(n, n-2, ..., 2, 1, 3, ..., n-1)` for even `n`, or
/// `(n, n-2, ..., 1, 2, 4, ..., n-1)` for odd `n`.
pub fn make_omega(n: usize) -> Result<Permutation> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "omega_n is defined for n >= 4, got {n}"
        )));
    }
    let n32 = n as u32;
    let down = (0..)
        .map(|i| n32 - 2 * i)
        .take_while(|&v| v >= 1 && v <= n32);
    let mut word: Vec<u32> = down.take(n.div_ceil(2)).collect();
    let first_up = if n.is_multiple_of(2) { 1 } else { 2 };
    word.extend((first_up..n32).step_by(2));
    Ok(Permutation::from_word_unchecked(word))
}

fn two() -> ConstraintSpec {
    ConstraintSpec::new(2).expect("2 is a valid bound")
}

/// `C_n -> B_{n-2}`: drop the first two entries.
pub fn phi_c_to_b(p: &Permutation) -> Result<Permutation> {
    let n = p.len();
    if n < 3 || p.at(2) as usize != n {
        return Err(Error::Domain(format!(
            "{p} is not in C_n: maximum not in position 2"
        )));
    }
    if !in_class(p, two()) {
        return Err(Error::Domain(format!("{p} is not in the m = 2 class")));
    }
    Permutation::new(p.word()[2..].to_vec())
}

/// `B_{n-2} -> C_n`: prepend `(n-1, n)`.
pub fn psi_b_to_c(p: &Permutation, n: usize) -> Result<Permutation> {
    if n < 3 || p.len() != n - 2 || p.at(1) as usize != n - 2 {
        return Err(Error::Domain(format!(
            "{p} is not a B_{{n-2}} member for target length n = {n}"
        )));
    }
    let mut word = vec![n as u32 - 1, n as u32];
    word.extend_from_slice(p.word());
    Ok(Permutation::from_word_unchecked(word))
}

/// All of `B_n`, built from `B_{n-1}`, `B_{n-3}` and `omega_n`.
///
/// Order: `n` prepended to `B_{n-1}`, then `(n, n-2, n-1)` prepended to
/// `B_{n-3}`, then `omega_n`.
pub fn enumerate_b(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::Domain("B_n is defined for n >= 1".into()));
    }
    let words = |ws: &[&[u32]]| -> Vec<Vec<u32>> { ws.iter().map(|w| w.to_vec()).collect() };
    let mut levels: Vec<Vec<Vec<u32>>> = vec![
        words(&[&[1]]),
        words(&[&[2, 1]]),
        words(&[&[3, 2, 1], &[3, 1, 2]]),
    ];
    for k in 4..=n {
        let top = k as u32;
        let mut level = Vec::new();
        for w in &levels[k - 2] {
            let mut next = vec![top];
            next.extend_from_slice(w);
            level.push(next);
        }
        for w in &levels[k - 4] {
            let mut next = vec![top, top - 2, top - 1];
            next.extend_from_slice(w);
            level.push(next);
        }
        level.push(make_omega(k)?.into_word());
        levels.push(level);
    }
    Ok(levels
        .swap_remove(n - 1)
        .into_iter()
        .map(Permutation::from_word_unchecked)
        .collect())
}
