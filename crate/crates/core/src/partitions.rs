//! Integer partitions of `n`, which are exactly the good partitions of the
//! constant Hilbert polynomial `n` on a curve.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `n_1 >= n_2 >= ... >= n_s > 0`.
///
/// Serializes as the bare list of parts; deserialization re-validates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts canonical (non-increasing, strictly positive, non-empty) parts only.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid(format!("partition {parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "partition {parts:?} is not in non-increasing order"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into canonical order. The flag reports whether the
    /// input had to be reordered.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<(Self, bool)> {
        let sorted = parts.windows(2).all(|w| w[0] >= w[1]);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok((Partition::new(parts)?, !sorted))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; kept alongside `len` for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn smallest_part(&self) -> u32 {
        *self.parts.last().expect("partitions are non-empty")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g.
/// `3 -> (3), (2,1), (1,1,1)`.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    descend(n, n, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// `p(n)` via Euler's pentagonal number recurrence.
pub fn partition_count(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let n = n as usize;
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        // (-1)^{k+1} terms are split so everything stays unsigned.
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &table[i - g1];
            if g2 <= i {
                *acc += &table[i - g2];
            }
        }
        table.push(plus - minus);
    }
    Ok(table.swap_remove(n))
}

/// Whether `family` is a good partition of the constant polynomial `n`: every
/// entry is strictly positive (so the Hilbert scheme of that many points is
/// non-empty) and the entries sum to `n`. Order does not matter.
pub fn is_good_partition(family: &[i64], n: i64) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::invalid("family of polynomials is empty"));
    }
    if family.iter().any(|&k| k <= 0) {
        return Ok(false);
    }
    let sum = family.iter().try_fold(0i64, |acc, &k| acc.checked_add(k));
    Ok(sum == Some(n))
}

/// Removes shared parts pairwise, returning the multiset differences
/// `a \ b` and `b \ a`, each non-increasing.
pub fn strip_common_parts(a: &Partition, b: &Partition) -> (Vec<u32>, Vec<u32>) {
    let (xs, ys) = (a.parts(), b.parts());
    let (mut i, mut j) = (0, 0);
    let (mut only_a, mut only_b) = (Vec::new(), Vec::new());
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Greater => {
                only_a.push(xs[i]);
                i += 1;
            }
            std::cmp::Ordering::Less => {
                only_b.push(ys[j]);
                j += 1;
            }
        }
    }
    only_a.extend_from_slice(&xs[i..]);
    only_b.extend_from_slice(&ys[j..]);
    (only_a, only_b)
}
