//! Non-isomorphism certificates for multi symmetric products
//! `Sym^{n_1}(C) x ... x Sym^{n_r}(C)` attached to partitions of `n`, and the
//! count of pairwise non-isomorphic Hilbert schemes `Hilb^{n_1} x ... x Hilb^{n_r}`.
//!
//! Routing for two distinct partitions `a`, `b` of `n` on a genus `g` curve:
//!
//! | genus | lengths | witness |
//! |-------|---------|---------|
//! | 0     | differ  | Picard rank (`Pic = Z^length`) |
//! | 0     | equal   | Poincaré polynomials of the multiprojective spaces |
//! | >= 1  | differ  | first Betti number `2·length·g` |
//! | >= 1  | equal   | after removing shared parts, with `m` the smallest remaining part: `B_{m+1}` if `m <= 2g-1`, else the Abel-Jacobi fibres `P^{n_i-g}` |
//!
//! A certificate is only ever a witness of *non*-isomorphism. When the chosen
//! invariant fails to separate a pair, the full Poincaré polynomials are
//! compared; if those agree too, [`Error::Indistinguishable`] is returned.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bigint_json;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, strip_common_parts, Partition};
use crate::poincare::{multi_sym_poincare, multiproj_poincare, PoincarePolynomial};

/// `Sym^{n_1}(C) x ... x Sym^{n_r}(C)`, of type `[(n_1, ..., n_r), n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiSymProduct {
    pub partition: Partition,
    pub genus: u32,
}

impl MultiSymProduct {
    pub fn new(partition: Partition, genus: u32) -> Self {
        MultiSymProduct { partition, genus }
    }

    /// Complex dimension, which is `n`.
    pub fn dimension(&self) -> u64 {
        self.partition.n()
    }

    pub fn poincare(&self) -> PoincarePolynomial {
        multi_sym_poincare(&self.partition, self.genus)
    }

    pub fn first_betti(&self) -> u64 {
        2 * self.partition.len() as u64 * u64::from(self.genus)
    }

    pub fn certify_against(&self, other: &MultiSymProduct) -> Result<NonIsoCertificate> {
        if self.genus != other.genus {
            return Err(Error::invalid("both products must live on the same curve"));
        }
        distinguish(&self.partition, &other.partition, self.genus)
    }
}

/// Which family of spaces a [`NonIsoCertificate::PolynomialDiffers`] compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolynomialSpace {
    /// `P^{n_1} x ... x P^{n_r}`, i.e. the genus 0 products.
    Multiprojective,
    /// The multi symmetric products themselves.
    MultiSymmetric,
}

/// Witness that two spaces are not isomorphic, or that the inputs coincide.
///
/// `a` fields belong to the first input, `b` fields to the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload")]
pub enum NonIsoCertificate {
    EqualPartitions,
    FirstBettiDiffers {
        a: u64,
        b: u64,
    },
    /// `B_degree` of the full products, where `degree = smallest_part + 1`
    /// and `smallest_part` is taken after removing shared parts.
    BettiDiffers {
        degree: usize,
        smallest_part: u32,
        #[serde(with = "bigint_json")]
        a: BigUint,
        #[serde(with = "bigint_json")]
        b: BigUint,
    },
    /// Fibre dimensions `n_i - g` of the product Abel-Jacobi maps.
    FiberMultiproj {
        smallest_part: u32,
        dims_a: Vec<u32>,
        dims_b: Vec<u32>,
    },
    PicardRankDiffers {
        a: usize,
        b: usize,
    },
    /// Smallest degree at which the Poincaré polynomials differ.
    PolynomialDiffers {
        space: PolynomialSpace,
        degree: usize,
        #[serde(with = "bigint_json")]
        a: BigUint,
        #[serde(with = "bigint_json")]
        b: BigUint,
    },
}

impl NonIsoCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            NonIsoCertificate::EqualPartitions => "EqualPartitions",
            NonIsoCertificate::FirstBettiDiffers { .. } => "FirstBettiDiffers",
            NonIsoCertificate::BettiDiffers { .. } => "BettiDiffers",
            NonIsoCertificate::FiberMultiproj { .. } => "FiberMultiproj",
            NonIsoCertificate::PicardRankDiffers { .. } => "PicardRankDiffers",
            NonIsoCertificate::PolynomialDiffers { .. } => "PolynomialDiffers",
        }
    }

    /// True for every kind except `EqualPartitions`.
    pub fn witnesses_non_isomorphism(&self) -> bool {
        !matches!(self, NonIsoCertificate::EqualPartitions)
    }

    /// Recomputes the named invariant for `a` and `b` from scratch and checks
    /// that it reproduces the payload with the two sides differing.
    pub fn verify(&self, a: &Partition, b: &Partition, genus: u32) -> Result<()> {
        let fail = |msg: String| Err(Error::UnsoundCertificate(format!("{} for {a} vs {b}, g = {genus}: {msg}", self.kind())));
        if a.n() != b.n() {
            return fail("inputs partition different integers".into());
        }
        match self {
            NonIsoCertificate::EqualPartitions => {
                if a != b {
                    return fail("inputs differ".into());
                }
            }
            NonIsoCertificate::FirstBettiDiffers { a: ba, b: bb } => {
                let got_a = multi_sym_poincare(a, genus).coeff(1);
                let got_b = multi_sym_poincare(b, genus).coeff(1);
                if got_a != BigUint::from(*ba) || got_b != BigUint::from(*bb) {
                    return fail(format!("recomputed B_1 = ({got_a}, {got_b})"));
                }
                if ba == bb {
                    return fail("values coincide".into());
                }
            }
            NonIsoCertificate::BettiDiffers { degree, smallest_part, a: va, b: vb } => {
                if a.len() != b.len() {
                    return fail("lengths differ".into());
                }
                let (sa, sb) = strip_common_parts(a, b);
                let m = sa.iter().chain(&sb).min().copied();
                if m != Some(*smallest_part) {
                    return fail(format!("smallest stripped part is {m:?}"));
                }
                if *degree != *smallest_part as usize + 1 || i64::from(*smallest_part) > 2 * i64::from(genus) - 1 {
                    return fail("degree does not match the small-part regime".into());
                }
                let got_a = multi_sym_poincare(a, genus).coeff(*degree);
                let got_b = multi_sym_poincare(b, genus).coeff(*degree);
                if &got_a != va || &got_b != vb {
                    return fail(format!("recomputed B_{degree} = ({got_a}, {got_b})"));
                }
                if va == vb {
                    return fail("values coincide".into());
                }
            }
            NonIsoCertificate::FiberMultiproj { smallest_part, dims_a, dims_b } => {
                if genus == 0 || a.len() != b.len() {
                    return fail("needs g >= 1 and equal lengths".into());
                }
                let (sa, sb) = strip_common_parts(a, b);
                let m = sa.iter().chain(&sb).min().copied();
                if m != Some(*smallest_part) || i64::from(*smallest_part) < 2 * i64::from(genus) {
                    return fail(format!("smallest stripped part {m:?} is not above 2g-1"));
                }
                let got_a = abel_jacobi_fiber_dims(a, genus)?;
                let got_b = abel_jacobi_fiber_dims(b, genus)?;
                if &got_a != dims_a || &got_b != dims_b {
                    return fail(format!("recomputed fibres {got_a:?} vs {got_b:?}"));
                }
                if multiset(dims_a) == multiset(dims_b) {
                    return fail("fibre dimension multisets coincide".into());
                }
            }
            NonIsoCertificate::PicardRankDiffers { a: ra, b: rb } => {
                if genus != 0 {
                    return fail("Picard rank = length only for genus 0".into());
                }
                if (a.len(), b.len()) != (*ra, *rb) || ra == rb {
                    return fail(format!("recomputed ranks ({}, {})", a.len(), b.len()));
                }
            }
            NonIsoCertificate::PolynomialDiffers { space, degree, a: va, b: vb } => {
                let (pa, pb) = match space {
                    PolynomialSpace::Multiprojective => {
                        (multiproj_poincare(a.parts())?, multiproj_poincare(b.parts())?)
                    }
                    PolynomialSpace::MultiSymmetric => {
                        (multi_sym_poincare(a, genus), multi_sym_poincare(b, genus))
                    }
                };
                if pa.first_difference(&pb) != Some(*degree) {
                    return fail(format!("first difference is at {:?}", pa.first_difference(&pb)));
                }
                if &pa.coeff(*degree) != va || &pb.coeff(*degree) != vb {
                    return fail("coefficients do not match".into());
                }
            }
        }
        Ok(())
    }
}

fn multiset(dims: &[u32]) -> Vec<u32> {
    let mut v = dims.to_vec();
    v.sort_unstable();
    v
}

/// First Betti number `2·length·g` of a multi symmetric product.
pub fn first_betti_multi(length: usize, g: u32) -> Result<u64> {
    if length == 0 {
        return Err(Error::invalid("length must be positive"));
    }
    Ok(2 * length as u64 * u64::from(g))
}

/// `h^0(O(D)) = d - g + 1` for `deg D = d >= 2g - 1`, where `h^1` vanishes.
/// The complete linear system `|D|` is then `P^{d-g}`.
pub fn riemann_roch_h0(d: i64, g: u32) -> Result<i64> {
    if d < 2 * i64::from(g) - 1 {
        return Err(Error::OutOfRegime { degree: d, genus: g });
    }
    Ok(d - i64::from(g) + 1)
}

/// Dimensions of the fibres `P^{n_1-g} x ... x P^{n_r-g}` of the product of
/// Abel-Jacobi maps; every part must be at least `2g - 1`.
pub fn abel_jacobi_fiber_dims(p: &Partition, g: u32) -> Result<Vec<u32>> {
    p.parts()
        .iter()
        .map(|&part| Ok((riemann_roch_h0(i64::from(part), g)? - 1) as u32))
        .collect()
}

/// Compares `P^{a_1} x ... x P^{a_s}` with `P^{b_1} x ... x P^{b_s}`.
pub fn multiproj_distinct(dims_a: &[u32], dims_b: &[u32]) -> Result<NonIsoCertificate> {
    if dims_a.is_empty() || dims_b.is_empty() {
        return Err(Error::invalid("dimension lists must be non-empty"));
    }
    if dims_a.len() != dims_b.len() {
        return Err(Error::invalid(format!(
            "factor counts differ: {} vs {}",
            dims_a.len(),
            dims_b.len()
        )));
    }
    let sum = |d: &[u32]| d.iter().map(|&x| u64::from(x)).sum::<u64>();
    if sum(dims_a) != sum(dims_b) {
        return Err(Error::invalid("total dimensions differ"));
    }
    if multiset(dims_a) == multiset(dims_b) {
        return Ok(NonIsoCertificate::EqualPartitions);
    }
    let pa = multiproj_poincare(dims_a)?;
    let pb = multiproj_poincare(dims_b)?;
    match pa.first_difference(&pb) {
        Some(degree) => Ok(NonIsoCertificate::PolynomialDiffers {
            space: PolynomialSpace::Multiprojective,
            degree,
            a: pa.coeff(degree),
            b: pb.coeff(degree),
        }),
        None => Err(Error::Indistinguishable {
            a: dims_a.to_vec(),
            b: dims_b.to_vec(),
            genus: 0,
        }),
    }
}

/// Certificate separating the multi symmetric products of `a` and `b` (or
/// `EqualPartitions` when `a == b`).
pub fn distinguish(a: &Partition, b: &Partition, g: u32) -> Result<NonIsoCertificate> {
    if a.n() != b.n() {
        return Err(Error::invalid(format!("{a} and {b} partition different integers")));
    }
    if a == b {
        return Ok(NonIsoCertificate::EqualPartitions);
    }
    let same_length = a.len() == b.len();

    if g == 0 {
        if !same_length {
            return Ok(NonIsoCertificate::PicardRankDiffers { a: a.len(), b: b.len() });
        }
        return match multiproj_distinct(a.parts(), b.parts()) {
            Ok(cert) if cert.witnesses_non_isomorphism() => Ok(cert),
            _ => polynomial_fallback(a, b, g),
        };
    }

    if !same_length {
        return Ok(NonIsoCertificate::FirstBettiDiffers {
            a: first_betti_multi(a.len(), g)?,
            b: first_betti_multi(b.len(), g)?,
        });
    }

    let (sa, sb) = strip_common_parts(a, b);
    let smallest_part = *sa
        .iter()
        .chain(&sb)
        .min()
        .expect("distinct partitions of equal length leave parts after stripping");

    if i64::from(smallest_part) < 2 * i64::from(g) {
        let degree = smallest_part as usize + 1;
        let va = multi_sym_poincare(a, g).coeff(degree);
        let vb = multi_sym_poincare(b, g).coeff(degree);
        if va != vb {
            return Ok(NonIsoCertificate::BettiDiffers { degree, smallest_part, a: va, b: vb });
        }
        return polynomial_fallback(a, b, g);
    }

    // The fibration argument needs every factor, shared ones included, in
    // the regime d >= 2g - 1.
    if let (Ok(dims_a), Ok(dims_b)) = (abel_jacobi_fiber_dims(a, g), abel_jacobi_fiber_dims(b, g)) {
        if multiset(&dims_a) != multiset(&dims_b) {
            return Ok(NonIsoCertificate::FiberMultiproj { smallest_part, dims_a, dims_b });
        }
    }
    polynomial_fallback(a, b, g)
}

fn polynomial_fallback(a: &Partition, b: &Partition, g: u32) -> Result<NonIsoCertificate> {
    let pa = multi_sym_poincare(a, g);
    let pb = multi_sym_poincare(b, g);
    match pa.first_difference(&pb) {
        Some(degree) => Ok(NonIsoCertificate::PolynomialDiffers {
            space: PolynomialSpace::MultiSymmetric,
            degree,
            a: pa.coeff(degree),
            b: pb.coeff(degree),
        }),
        None => Err(Error::Indistinguishable {
            a: a.parts().to_vec(),
            b: b.parts().to_vec(),
            genus: g,
        }),
    }
}

/// Certificate for the pair `(partitions[i], partitions[j])`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub i: usize,
    pub j: usize,
    pub certificate: NonIsoCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: u32,
    pub genus: u32,
    /// Number of isomorphism classes among the Hilbert schemes.
    pub count: usize,
    pub partitions: Vec<Partition>,
    /// One entry per unordered pair, in `(i, j)` lexicographic order.
    pub certificates: Vec<PairCertificate>,
}

impl ClassificationReport {
    /// Re-verifies every embedded certificate.
    pub fn verify(&self) -> Result<()> {
        let k = self.partitions.len();
        if self.certificates.len() != k * k.saturating_sub(1) / 2 {
            return Err(Error::UnsoundCertificate("wrong number of pair certificates".into()));
        }
        for pc in &self.certificates {
            let (a, b) = (&self.partitions[pc.i], &self.partitions[pc.j]);
            if !pc.certificate.witnesses_non_isomorphism() {
                return Err(Error::UnsoundCertificate(format!("{a} vs {b} is not separated")));
            }
            pc.certificate.verify(a, b, self.genus)?;
        }
        if self.count != k {
            return Err(Error::UnsoundCertificate("count disagrees with the partitions".into()));
        }
        Ok(())
    }
}

/// Classifies the Hilbert schemes attached to the good partitions of the
/// constant polynomial `n` on a genus `g` curve.
///
/// Pairs are certified in parallel; the report lists them in pair order and,
/// on failure, the error of the first failing pair is returned.
pub fn classify_hilbert_schemes(n: u32, g: u32) -> Result<ClassificationReport> {
    let partitions = enumerate_partitions(n)?;
    let k = partitions.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let results: Vec<Result<PairCertificate>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            distinguish(&partitions[i], &partitions[j], g).map(|certificate| PairCertificate { i, j, certificate })
        })
        .collect();
    let certificates = results.into_iter().collect::<Result<Vec<_>>>()?;
    // Partitions are pairwise distinct, so each certificate is a witness and
    // every partition is its own class.
    debug_assert!(certificates.iter().all(|c| c.certificate.witnesses_non_isomorphism()));
    Ok(ClassificationReport { n, genus: g, count: k, partitions, certificates })
}
