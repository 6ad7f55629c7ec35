//! Degree bookkeeping for ind-varieties of higher rank divisors on a curve.
//!
//! An `(r, n)`-divisor is a rank `r`, degree `n` coherent submodule of
//! `K^{⊕r}`. The constituents of the two inductive systems are indexed by
//! effective divisors `D`, but every degree below depends on `D` only through
//! `deg(D)`, so divisors are represented by their degree.
//!
//! Constituent notation: `Q^{r,n}(D) = Quot^{n + r·deg D}` of the trivial
//! rank `r` sheaf.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClassIndex {
    pub rank: u32,
    pub degree: i64,
}

impl DivisorClassIndex {
    pub fn new(rank: u32, degree: i64) -> Result<Self> {
        if rank == 0 {
            return Err(Error::invalid("divisor rank must be at least 1"));
        }
        Ok(DivisorClassIndex { rank, degree })
    }
}

/// `n / r` in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    pub numerator: i64,
    pub denominator: u32,
}

impl Slope {
    pub fn is_integral(&self) -> bool {
        self.denominator == 1
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

pub fn slope(idx: DivisorClassIndex) -> Slope {
    let r = i64::from(idx.rank);
    let g = idx.degree.gcd(&r);
    Slope {
        numerator: idx.degree / g,
        denominator: (r / g) as u32,
    }
}

/// `Quot^d` of the trivial rank `r` sheaf, by torsion degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuotIndex {
    pub rank: u32,
    pub degree: i128,
}

impl QuotIndex {
    /// The constituent `Q^{r,n}(D)` for `deg(D) = deg_d`.
    pub fn constituent(rank: u32, n: i64, deg_d: u64) -> Self {
        QuotIndex { rank, degree: quot_degree(rank, n, deg_d) }
    }

    pub fn is_nonempty(&self) -> bool {
        self.rank >= 1 && self.degree >= 0
    }

    /// Weak point property, as supplied by the cited result: positive degree
    /// divisible by the rank.
    pub fn has_wpp(&self) -> bool {
        wpp_hypothesis(self.rank, self.degree)
    }

    /// Diagonal property, known here only in rank one where the constituent
    /// is `Sym^d(C)` with `d > 0`.
    pub fn has_dp(&self) -> bool {
        self.rank == 1 && self.degree > 0
    }
}

/// Torsion degree `n + r·deg(D)` of `Q^{r,n}(D)`.
pub fn quot_degree(r: u32, n: i64, deg_d: u64) -> i128 {
    i128::from(n) + i128::from(r) * i128::from(deg_d)
}

/// Degrees along the structure map `Q^{r,n}(D_1) -> Q^{r,n}(D_2)` given by
/// tensoring kernels with `O(-(D_2 - D_1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureMapDegrees {
    pub kernel_before: i128,
    pub kernel_after: i128,
    pub quotient_after: i128,
}

pub fn structure_map_degrees(r: u32, n: i64, deg_d1: u64, deg_d2: u64) -> Result<StructureMapDegrees> {
    if deg_d2 < deg_d1 {
        return Err(Error::invalid(format!(
            "structure map needs D2 >= D1, got degrees {deg_d1} and {deg_d2}"
        )));
    }
    let r = i128::from(r);
    let n = i128::from(n);
    let kernel_before = -n - r * i128::from(deg_d1);
    // deg(Ker ⊗ O(-D)) = r·(deg D1 - deg D2) + deg Ker
    let kernel_after = r * (i128::from(deg_d1) - i128::from(deg_d2)) + kernel_before;
    Ok(StructureMapDegrees {
        kernel_before,
        kernel_after,
        quotient_after: -kernel_after,
    })
}

/// Torsion degree `r·d - n` on both sides of `Div^{r,n}(D) -> Q^{r,-n}(D)`.
pub fn quasi_iso_degree(r: u32, n: i64, d: u64) -> i128 {
    i128::from(r) * i128::from(d) - i128::from(n)
}

/// Least effective degree `d_0 > k`. Past it, every constituent of the
/// integral slope ind-variety `Q^{r,-rk}` has torsion degree `r(deg D - k) > 0`.
pub fn wpp_threshold(_r: u32, k: i64) -> u64 {
    (i128::from(k) + 1).max(0) as u64
}

/// Least effective degree `d_1 > n`. Past it, `Q^{1,-n}(D) = Sym^{deg D - n}(C)`
/// with positive exponent.
pub fn dp_threshold(n: i64) -> u64 {
    (i128::from(n) + 1).max(0) as u64
}

/// Hypotheses for the weak point property of `Quot^d` of the trivial rank `r`
/// sheaf: `d > 0` and `r | d`.
pub fn wpp_hypothesis(r: u32, d: i128) -> bool {
    r >= 1 && d > 0 && d % i128::from(r) == 0
}
