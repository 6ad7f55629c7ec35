//! Exact cohomological invariants of symmetric products of smooth projective
//! curves.
//!
//! - [`partitions`]: integer partitions and good partitions of a constant polynomial
//! - [`poincare`]: Macdonald Betti numbers and Poincaré polynomials of
//!   `Sym^n(C)`, multi symmetric products and multiprojective spaces
//! - [`distinguisher`]: non-isomorphism certificates and the classification of
//!   Hilbert schemes attached to partitions of `n`
//! - [`ind_divisors`]: degree bookkeeping for ind-varieties of higher rank divisors
//!
//! All arithmetic is exact. Betti numbers are [`BigUint`](num_bigint::BigUint)s.

pub mod distinguisher;
pub mod error;
pub mod ind_divisors;
pub mod partitions;
pub mod poincare;

pub mod bigint_json;

pub use distinguisher::{
    classify_hilbert_schemes, distinguish, first_betti_multi, multiproj_distinct,
    riemann_roch_h0, ClassificationReport, MultiSymProduct, NonIsoCertificate, PairCertificate,
    PolynomialSpace,
};
pub use error::{Error, Result};
pub use ind_divisors::{
    dp_threshold, quasi_iso_degree, quot_degree, slope, structure_map_degrees, wpp_hypothesis,
    wpp_threshold, DivisorClassIndex, QuotIndex, Slope, StructureMapDegrees,
};
pub use partitions::{
    enumerate_partitions, is_good_partition, partition_count, strip_common_parts, Partition,
};
pub use poincare::{
    binomial, composition_coefficient, macdonald_betti, multi_sym_poincare, multiproj_poincare,
    poly_mul, sym_poincare, CurveClass, PoincarePolynomial,
};
