//! Oracles shared by the integration tests. Plain `u128` arithmetic with no
//! calls into the library, so they can check it.

#![allow(dead_code)]

use num_bigint::BigUint;
use symprod::PoincarePolynomial;

pub fn choose(a: u64, b: i64) -> u128 {
    if b < 0 || b as u64 > a {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..a {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row[b as usize]
}

/// Betti numbers of `Sym^n(C)` straight from the binomial sums.
pub fn sym_bettis(n: u64, g: u64) -> Vec<u128> {
    (0..=2 * n)
        .map(|r| {
            let r = if r > n { 2 * n - r } else { r } as i64;
            (0..=r / 2).map(|j| choose(2 * g, r - 2 * j)).sum()
        })
        .collect()
}

pub fn convolve(a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn multi_sym_bettis(parts: &[u32], g: u64) -> Vec<u128> {
    parts
        .iter()
        .map(|&m| sym_bettis(u64::from(m), g))
        .reduce(|a, b| convolve(&a, &b))
        .unwrap()
}

/// `1 + x^2 + ... + x^{2m}`
pub fn even_geometric(m: u64) -> Vec<u128> {
    (0..=2 * m).map(|i| u128::from(i % 2 == 0)).collect()
}

pub fn to_u128(p: &PoincarePolynomial) -> Vec<u128> {
    p.coeffs().iter().map(|c| u128::try_from(c).unwrap()).collect()
}

pub fn big(v: u128) -> BigUint {
    BigUint::from(v)
}
