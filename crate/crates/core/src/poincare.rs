//! Exact Poincaré polynomials.
//!
//! The Betti numbers of `Sym^n(C)` for a genus `g` curve are Macdonald's
//! binomial sums
//!
//! ```text
//! B_r = B_{2n-r} = C(2g, r) + C(2g, r-2) + C(2g, r-4) + ...    (0 <= r <= n)
//! ```
//!
//! and Poincaré polynomials multiply over products of spaces (Künneth).
//! Coefficients are unbounded integers: `C(2g, g)` leaves `u64` around `g = 34`
//! and products of several factors get there much sooner.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_json;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A smooth projective curve over the complex numbers, up to what matters
/// for Betti numbers: its genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub genus: u32,
}

impl CurveClass {
    pub fn new(genus: u32) -> Self {
        CurveClass { genus }
    }

    /// Poincaré polynomial of `Sym^n` of this curve.
    pub fn sym(&self, n: u32) -> Result<PoincarePolynomial> {
        sym_poincare(n, self.genus)
    }
}

/// Dense polynomial with non-negative integer coefficients; `coeffs[i]` is
/// the `i`-th Betti number.
///
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPolynomial")]
pub struct PoincarePolynomial {
    #[serde(with = "bigint_json::vec")]
    coeffs: Vec<BigUint>,
}

#[derive(Deserialize)]
struct RawPolynomial {
    #[serde(with = "bigint_json::vec")]
    coeffs: Vec<BigUint>,
}

impl TryFrom<RawPolynomial> for PoincarePolynomial {
    type Error = Error;

    fn try_from(raw: RawPolynomial) -> Result<Self> {
        if raw.coeffs.last().is_some_and(Zero::is_zero) {
            return Err(Error::invalid("polynomial has a zero leading coefficient"));
        }
        Ok(PoincarePolynomial { coeffs: raw.coeffs })
    }
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        PoincarePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PoincarePolynomial { coeffs: vec![BigUint::one()] }
    }

    /// Builds a polynomial, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PoincarePolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero above the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Sum of all Betti numbers.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Smallest degree at which the two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&k| self.coeffs.get(k) != other.coeffs.get(k))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = PoincarePolynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Mul for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn mul(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        poly_mul(self, rhs)
    }
}

impl fmt::Debug for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_string())).finish()
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u32, b: i64) -> BigUint {
    if b < 0 || b > i64::from(a) {
        return BigUint::zero();
    }
    let b = (b as u32).min(a - b as u32);
    let mut acc = BigUint::one();
    for i in 0..b {
        // Exact at every step: acc = C(a, i) before the update.
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `C(2g, 0..=max_k)` as one row.
fn binomial_row(g: u32, max_k: usize) -> Vec<BigUint> {
    let top = 2 * g as usize;
    let mut row = Vec::with_capacity(max_k + 1);
    let mut c = BigUint::one();
    for k in 0..=max_k {
        if k > top {
            row.push(BigUint::zero());
            continue;
        }
        row.push(c.clone());
        c *= (top - k) as u64;
        c /= (k + 1) as u64;
    }
    row
}

/// The `r`-th Betti number of `Sym^n(C)` for a genus `g` curve; zero outside
/// `[0, 2n]`.
pub fn macdonald_betti(n: u32, g: u32, r: i64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("symmetric power n must be positive"));
    }
    let top = 2 * i64::from(n);
    if !(0..=top).contains(&r) {
        return Ok(BigUint::zero());
    }
    let r = if r > i64::from(n) { top - r } else { r };
    let two_g = 2 * g;
    Ok((0..=r / 2).map(|j| binomial(two_g, r - 2 * j)).sum())
}

/// Poincaré polynomial of `Sym^n(C)`, palindromic of degree `2n`.
pub fn sym_poincare(n: u32, g: u32) -> Result<PoincarePolynomial> {
    if n == 0 {
        return Err(Error::invalid("symmetric power n must be positive"));
    }
    let n = n as usize;
    let row = binomial_row(g, n);
    // lower[r] = row[r] + row[r-2] + ...
    let mut lower: Vec<BigUint> = Vec::with_capacity(n + 1);
    for r in 0..=n {
        let prev = if r >= 2 { lower[r - 2].clone() } else { BigUint::zero() };
        lower.push(prev + &row[r]);
    }
    let mut coeffs = lower.clone();
    coeffs.extend(lower.into_iter().rev().skip(1));
    Ok(PoincarePolynomial::from_coeffs(coeffs))
}

/// Exact convolution product.
pub fn poly_mul(p: &PoincarePolynomial, q: &PoincarePolynomial) -> PoincarePolynomial {
    if p.is_zero() || q.is_zero() {
        return PoincarePolynomial::zero();
    }
    let mut out = vec![BigUint::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    PoincarePolynomial::from_coeffs(out)
}

/// Poincaré polynomial of `Sym^{n_1}(C) x ... x Sym^{n_r}(C)`.
pub fn multi_sym_poincare(p: &Partition, g: u32) -> PoincarePolynomial {
    let mut acc = PoincarePolynomial::one();
    let mut cached: Option<(u32, PoincarePolynomial)> = None;
    for &part in p.parts() {
        // Parts arrive sorted, so equal parts are adjacent.
        if cached.as_ref().map(|(k, _)| *k) != Some(part) {
            let sym = sym_poincare(part, g).expect("partition parts are positive");
            cached = Some((part, sym));
        }
        acc = &acc * &cached.as_ref().unwrap().1;
    }
    acc
}

/// Poincaré polynomial of `P^{m_1} x ... x P^{m_s}`: the product of
/// `1 + x^2 + ... + x^{2m}` over the dimensions.
pub fn multiproj_poincare(dims: &[u32]) -> Result<PoincarePolynomial> {
    if dims.is_empty() {
        return Err(Error::invalid("a multiprojective space needs at least one factor"));
    }
    Ok(dims.iter().fold(PoincarePolynomial::one(), |acc, &m| {
        let mut coeffs = vec![BigUint::zero(); 2 * m as usize + 1];
        for c in coeffs.iter_mut().step_by(2) {
            *c = BigUint::one();
        }
        &acc * &PoincarePolynomial::from_coeffs(coeffs)
    }))
}

/// Coefficient of `x^k` in the multi symmetric product's Poincaré polynomial,
/// summed directly over compositions `t_1 + ... + t_r = k` of the products
/// `B_{t_1}(Sym^{n_1}) * ... * B_{t_r}(Sym^{n_r})`. Zero for `k > 2n`.
pub fn composition_coefficient(p: &Partition, g: u32, k: usize) -> BigUint {
    let bettis: Vec<Vec<BigUint>> = p
        .parts()
        .iter()
        .map(|&n| {
            (0..=2 * i64::from(n))
                .map(|r| macdonald_betti(n, g, r).expect("partition parts are positive"))
                .collect()
        })
        .collect();
    // capacity[i] = largest degree the factors i.. can still absorb
    let mut capacity = vec![0usize; bettis.len() + 1];
    for i in (0..bettis.len()).rev() {
        capacity[i] = capacity[i + 1] + bettis[i].len() - 1;
    }
    if k > capacity[0] {
        return BigUint::zero();
    }
    sum_compositions(&bettis, &capacity, 0, k, &BigUint::one())
}

fn sum_compositions(
    bettis: &[Vec<BigUint>],
    capacity: &[usize],
    i: usize,
    remaining: usize,
    prefix: &BigUint,
) -> BigUint {
    if i == bettis.len() {
        return if remaining == 0 { prefix.clone() } else { BigUint::zero() };
    }
    let lo = remaining.saturating_sub(capacity[i + 1]);
    let hi = remaining.min(bettis[i].len() - 1);
    let mut total = BigUint::zero();
    for t in lo..=hi {
        let b = &bettis[i][t];
        if b.is_zero() {
            continue;
        }
        total += sum_compositions(bettis, capacity, i + 1, remaining - t, &(prefix * b));
    }
    total
}
