//! Acceptance suite. Runs every criterion in sequence, prints one PASS/FAIL
//! line each and exits non-zero if any fails.
//!
//! All checks are exact equalities. Each criterion also carries a wall-clock
//! budget that counts towards its verdict.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{big, choose, convolve, even_geometric, multi_sym_bettis, sym_bettis, to_u128};
use num_bigint::BigUint;
use symprod::*;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn ac1_golden_coefficients() -> Check {
    let mut notes = Vec::new();
    for g in 1..=3u64 {
        let g2 = u128::from(g);
        let c2 = choose(2 * g, 2);
        let c3 = choose(2 * g, 3);
        let golden = [
            (&[4, 1][..], 2, 2 + 4 * g2 * g2 + c2),
            (&[3, 2][..], 2, 2 + 4 * g2 * g2 + 2 * c2),
            (&[5, 4, 2][..], 3, 18 * g2 + 8 * g2.pow(3) + 12 * g2 * c2 + 2 * c3),
            (&[4, 4, 3][..], 3, 18 * g2 + 8 * g2.pow(3) + 12 * g2 * c2 + 3 * c3),
            (&[12, 2][..], 3, 8 * g2 + 4 * g2 * c2 + c3),
        ];
        for (parts, k, expected) in golden {
            let got = multi_sym_poincare(&part(parts), g as u32).coeff(k);
            ensure!(got == big(expected), "{parts:?} x^{k} at g={g}: got {got}, expected {expected}");
        }
        // (8,6): convolve the Sym^8 and Sym^6 Betti vectors directly.
        let oracle = convolve(&sym_bettis(8, g), &sym_bettis(6, g))[3];
        ensure!(oracle == 8 * g2 + 4 * g2 * c2 + 2 * c3, "(8,6) oracle disagrees with closed form at g={g}");
        let got = multi_sym_poincare(&part(&[8, 6]), g as u32).coeff(3);
        ensure!(got == big(oracle), "(8,6) x^3 at g={g}: got {got}, oracle {oracle}");
        let closed = 8 * g2 + 4 * g2 * c2 + 2 * g2 * c3;
        if closed != oracle {
            notes.push(format!("g={g}: closed form 2g*C(2g,3) gives {closed}, convolution gives {oracle}"));
        }
    }
    Ok(format!(
        "(4,1) (3,2) (5,4,2) (4,4,3) (12,2) match closed forms, (8,6) matches convolution [{}]",
        notes.join("; ")
    ))
}

fn ac2_classification_count() -> Check {
    let mut certs = 0usize;
    for n in 1..=12u32 {
        let p = partition_count(n).unwrap();
        for g in 0..=3u32 {
            let report = classify_hilbert_schemes(n, g).map_err(|e| format!("n={n} g={g}: {e}"))?;
            ensure!(BigUint::from(report.count) == p, "n={n} g={g}: count {} != p(n) {p}", report.count);
            report.verify().map_err(|e| e.to_string())?;
            // Verify again from a fresh enumeration so the report cannot vouch for itself.
            let fresh = enumerate_partitions(n).unwrap();
            ensure!(fresh == report.partitions, "n={n}: partition list mismatch");
            for pc in &report.certificates {
                pc.certificate.verify(&fresh[pc.i], &fresh[pc.j], g).map_err(|e| e.to_string())?;
            }
            certs += report.certificates.len();
        }
    }
    Ok(format!("count = p(n) for n <= 12, g <= 3; {certs} certificates verified"))
}

fn ac3_small_n_all_genera() -> Check {
    for n in 1..=3u32 {
        let parts = enumerate_partitions(n).unwrap();
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                ensure!(a.len() != b.len(), "{a} and {b} share a length");
            }
        }
        for g in 0..=5u32 {
            let report = classify_hilbert_schemes(n, g).map_err(|e| e.to_string())?;
            ensure!(BigUint::from(report.count) == partition_count(n).unwrap(), "n={n} g={g}");
            report.verify().map_err(|e| e.to_string())?;
        }
    }
    Ok("n in {1,2,3}, g <= 5: count = p(n), all lengths distinct".into())
}

fn ac4_macdonald_properties() -> Check {
    for g in 0..=5u32 {
        let polys: Vec<PoincarePolynomial> = (1..=20).map(|n| sym_poincare(n, g).unwrap()).collect();
        for n in 1..=20u32 {
            for r in 0..=2 * i64::from(n) {
                let b = macdonald_betti(n, g, r).unwrap();
                ensure!(b == macdonald_betti(n, g, 2 * i64::from(n) - r).unwrap(), "palindromy n={n} g={g} r={r}");
                ensure!(b == big(sym_bettis(u64::from(n), u64::from(g))[r as usize]), "oracle n={n} g={g} r={r}");
            }
            ensure!(polys[n as usize - 1].is_palindromic(), "sym_poincare({n},{g}) not palindromic");
        }
        for n in 1..=20usize {
            for m in n + 1..=20 {
                for i in 0..=n {
                    ensure!(polys[m - 1].coeff(i) == polys[n - 1].coeff(i), "equal summands n={n} m={m} i={i} g={g}");
                }
            }
        }
    }
    Ok("B_r = B_{2n-r} and B_i(Sym^m) = B_i(Sym^n) for i <= n < m <= 20, g <= 5".into())
}

fn ac5_genus_zero_collapse() -> Check {
    for n in 1..=30u32 {
        ensure!(
            to_u128(&sym_poincare(n, 0).unwrap()) == even_geometric(u64::from(n)),
            "sym_poincare({n},0) is not 1 + x^2 + ... + x^{}",
            2 * n
        );
    }
    for n in 1..=12u32 {
        let report = classify_hilbert_schemes(n, 0).map_err(|e| e.to_string())?;
        for pc in &report.certificates {
            let ok = matches!(
                pc.certificate,
                NonIsoCertificate::PicardRankDiffers { .. }
                    | NonIsoCertificate::PolynomialDiffers { space: PolynomialSpace::Multiprojective, .. }
            );
            ensure!(ok, "n={n}: genus 0 routed through {}", pc.certificate.kind());
        }
    }
    Ok("Sym^n(P^1) = P^n for n <= 30; genus 0 uses Picard rank / multiprojective polynomials only".into())
}

fn ac6_projective_bundle() -> Check {
    let mut checked = 0;
    for g in 0..=4u64 {
        let jac = (0..2 * g).fold(vec![1u128], |acc, _| convolve(&acc, &[1, 1]));
        for d in (2 * g).saturating_sub(1).max(1)..=30 {
            let oracle = convolve(&jac, &even_geometric(d - g));
            ensure!(to_u128(&sym_poincare(d as u32, g as u32).unwrap()) == oracle, "d={d} g={g}");
            checked += 1;
        }
    }
    Ok(format!("Sym^d(C) = (1+x)^(2g) * [P^(d-g)] on {checked} (d, g) pairs"))
}

fn ac7_multiprojective_separation() -> Check {
    let mut pairs = 0usize;
    for n in 1..=18u32 {
        let parts = enumerate_partitions(n).unwrap();
        let polys: Vec<PoincarePolynomial> = parts.iter().map(|p| multiproj_poincare(p.parts()).unwrap()).collect();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if parts[i].len() != parts[j].len() {
                    continue;
                }
                ensure!(polys[i] != polys[j], "{} and {} collide", parts[i], parts[j]);
                let cert = multiproj_distinct(parts[i].parts(), parts[j].parts()).map_err(|e| e.to_string())?;
                ensure!(cert.witnesses_non_isomorphism(), "{} vs {}", parts[i], parts[j]);
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} same-length pairs separated for n <= 18"))
}

fn ac8_ind_divisor_bookkeeping() -> Check {
    for r in 1..=5u32 {
        let ri = i64::from(r);
        for k in -10..=10i64 {
            let d0 = wpp_threshold(r, k);
            ensure!(i128::from(d0) > i128::from(k) && (d0 == 0 || i128::from(d0) - 1 <= i128::from(k)), "d0 not least for k={k}");
            for deg in d0..=d0 + 20 {
                let q = quot_degree(r, -ri * k, deg);
                ensure!(q == i128::from(ri) * (i128::from(deg) - i128::from(k)) && q > 0, "r={r} k={k} deg={deg}");
                ensure!(wpp_hypothesis(r, q), "wpp hypothesis fails at r={r} k={k} deg={deg}");
            }
            if k >= 0 {
                ensure!(!wpp_hypothesis(r, quot_degree(r, -ri * k, k as u64)), "degree 0 accepted at r={r} k={k}");
            }
            for d1 in 0..=15u64 {
                for d2 in d1..=15 {
                    let lin = quot_degree(r, k, d2) - quot_degree(r, k, d1);
                    ensure!(lin == i128::from(r) * i128::from(d2 - d1), "linearity r={r} n={k}");
                    let s = structure_map_degrees(r, k, d1, d2).map_err(|e| e.to_string())?;
                    ensure!(s.kernel_after + s.quotient_after == 0 && s.quotient_after == quot_degree(r, k, d2), "structure map");
                }
                ensure!(quasi_iso_degree(r, k, d1) == quot_degree(r, -k, d1), "quasi-iso r={r} n={k}");
            }
        }
        // positivity plus divisibility, nothing else
        for d in -30..=30i128 {
            ensure!(wpp_hypothesis(r, d) == (d > 0 && d % i128::from(r) == 0), "wpp_hypothesis({r},{d})");
        }
    }
    for n in -10..=10i64 {
        let t = dp_threshold(n);
        for deg in t..=t + 20 {
            ensure!(quot_degree(1, -n, deg) >= 1, "dp constituent empty at n={n} deg={deg}");
        }
    }
    Ok("thresholds, linearity, structure maps and the WPP predicate hold on r <= 5, |k|,|n| <= 10".into())
}

fn ac9_convolution_consistency() -> Check {
    let mut coeffs = 0usize;
    for n in 1..=10u32 {
        for p in enumerate_partitions(n).unwrap() {
            for g in 0..=3u32 {
                let product = multi_sym_poincare(&p, g);
                ensure!(to_u128(&product) == multi_sym_bettis(p.parts(), u64::from(g)), "{p} g={g} vs oracle");
                for k in 0..=2 * n as usize {
                    ensure!(composition_coefficient(&p, g, k) == product.coeff(k), "{p} g={g} k={k}");
                    coeffs += 1;
                }
            }
        }
    }
    Ok(format!("{coeffs} coefficients agree"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 golden coefficients", Duration::from_secs(1), ac1_golden_coefficients),
        ("AC2 class count = p(n), n <= 12", Duration::from_secs(60), ac2_classification_count),
        ("AC3 n = 1, 2, 3 in every genus", Duration::from_secs(1), ac3_small_n_all_genera),
        ("AC4 Macdonald palindromy / equal summands", Duration::from_secs(5), ac4_macdonald_properties),
        ("AC5 genus 0 collapse", Duration::from_secs(1), ac5_genus_zero_collapse),
        ("AC6 projective bundle cross-check", Duration::from_secs(2), ac6_projective_bundle),
        ("AC7 multiprojective separation, n <= 18", Duration::from_secs(30), ac7_multiprojective_separation),
        ("AC8 ind-divisor bookkeeping", Duration::from_secs(1), ac8_ind_divisor_bookkeeping),
        ("AC9 composition vs product", Duration::from_secs(10), ac9_convolution_consistency),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= budget => format!("PASS {name} ({elapsed:.2?} <= {budget:?}): {detail}"),
            Ok(detail) => format!("FAIL {name} (over budget: {elapsed:.2?} > {budget:?}): {detail}"),
            Err(why) => format!("FAIL {name} ({elapsed:.2?}): {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("{verdict}");
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
