//! Integer partitions and the combinatorics used by the symmetric-function
//! bases: conjugation, dominance, the scalars `z_λ` and `c_λ`, refinement
//! counts, and enumeration in reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alpha::AlphaRat;
use crate::error::{Error, Result};
use crate::field::Rational;

/// A weakly decreasing sequence of positive integers.
///
/// Only nonzero parts are stored; the empty partition is the partition of 0.
/// Ordering is graded: first by weight, then lexicographically, so within a
/// fixed weight a descending sort is the reverse lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The 1-based part λ_i, zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// λ′ with λ′_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Dominance: μ ≤ λ iff every leading partial sum of μ is at most that of
    /// λ. Partitions of different weights are never comparable.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `(part, count)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// z_λ = Π_i i^{k_i} k_i! as an integer.
    pub fn z_int(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (p, k) in self.multiplicities() {
            for j in 1..=k {
                acc *= BigInt::from(p) * BigInt::from(j);
            }
        }
        acc
    }

    /// c_λ = Π_i k_i! as an integer.
    pub fn c_int(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (_, k) in self.multiplicities() {
            for j in 1..=k {
                acc *= BigInt::from(j);
            }
        }
        acc
    }

    /// λ ⊔ 1: one extra part equal to 1.
    pub fn append_one(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.push(1);
        Partition(parts)
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Increases part `i` (1-based, up to ℓ+1) by one if the result is a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() + 1 {
            return None;
        }
        if i > 1 && self.part(i - 1) <= self.part(i) {
            return None;
        }
        let mut parts = self.0.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// Decreases part `i` (1-based, up to ℓ) by one if the result is a partition.
    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() || self.part(i) <= self.part(i + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    /// All `(i, λ)` with λ obtained by adding a box in row `i`.
    pub fn up_steps(&self) -> Vec<(usize, Partition)> {
        (1..=self.len() + 1).filter_map(|i| self.add_box(i).map(|l| (i, l))).collect()
    }

    /// All `(i, μ)` with μ obtained by removing a box from row `i`.
    pub fn down_steps(&self) -> Vec<(usize, Partition)> {
        (1..=self.len()).filter_map(|i| self.remove_box(i).map(|m| (i, m))).collect()
    }

    /// If `other` is `self` with one extra box, the row it was added to.
    pub fn added_box_row(&self, other: &Partition) -> Option<usize> {
        self.up_steps().into_iter().find(|(_, l)| l == other).map(|(i, _)| i)
    }
}

/// z_λ as a constant of Q(α).
pub fn z_of(lambda: &Partition) -> AlphaRat {
    AlphaRat::constant(Rational::from_integer(lambda.z_int()))
}

/// c_λ as a constant of Q(α).
pub fn c_of(lambda: &Partition) -> AlphaRat {
    AlphaRat::constant(Rational::from_integer(lambda.c_int()))
}

/// R_λμ: the number of maps θ from the parts of μ to the rows of λ whose
/// fibres sum to the rows of λ.
pub fn refinement_count(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    fn assign(parts: &[u32], remaining: &mut [u32]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return remaining.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for i in 0..remaining.len() {
            if remaining[i] >= first {
                remaining[i] -= first;
                total += assign(rest, remaining);
                remaining[i] += first;
            }
        }
        total
    }
    let mut rows = lambda.parts().to_vec();
    assign(mu.parts(), &mut rows)
}

/// Partitions of `n` (of length exactly `k` when given), in reverse
/// lexicographic order.
pub fn enumerate(n: u32, k: Option<usize>) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, k: Option<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            if k.is_none_or(|k| prefix.len() == k) {
                out.push(Partition(prefix.clone()));
            }
            return;
        }
        if k.is_some_and(|k| prefix.len() >= k) {
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), k, &mut out);
    out
}

/// All partitions of weight at most `n`, graded ascending.
pub fn enumerate_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(|w| enumerate(w, None)).collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Text form: `3,1,1`, with `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{s:?} is not a weakly decreasing list of positive parts")));
        }
        Ok(Partition(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Partition::new(Vec::<u32>::deserialize(d)?))
    }
}

/// Shorthand constructor: `part![3, 1, 1]`.
#[macro_export]
macro_rules! part {
    ($($p:expr),* $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),*])
    };
}
