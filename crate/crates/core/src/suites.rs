//! Verification sweep drivers.
//!
//! Each sweep runs one identity family over a parameter domain and returns
//! one report per parameter point (the residual is the worst case over any
//! inner index). The CLI `verify` subcommand and the acceptance tests both
//! run through these.

use crate::gauss_sums::{
    classical_char_sum, classical_char_sum_closed, gauss_sum_closed, gauss_sum_direct,
    verify_reciprocity, GaussSumParams, ParityClass,
};
use crate::numtheory::{bezout_pair, gcd, jacobi_symbol, FractionalDistance};
use crate::phase::ComplexAmp;
use crate::report::VerificationReport;
use crate::talbot::{
    complementarity_residual, particle_coeff_closed, particle_coeff_direct,
    verify_phase_identities, wave_coeff_closed, wave_coeff_direct,
};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

fn coprime_pairs(max: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in 1..=max {
        for q in 1..=max {
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

/// `particle = e^{i pi/4} wave` over every coprime pair up to `max` and
/// every image index in one period.
pub fn sweep_complementarity(max: u64, tolerance: f64) -> Vec<VerificationReport> {
    coprime_pairs(max)
        .par_iter()
        .map(|&(p, q)| {
            let zeta = FractionalDistance::new(p, q).unwrap();
            let worst = (0..q as i64)
                .map(|n| complementarity_residual(n, &zeta))
                .fold(0.0, f64::max)
                .max(0.0);
            VerificationReport::new(
                "complementarity",
                format!("zeta={p}/{q}, n=0..{q}"),
                particle_coeff_direct(0, &zeta),
                wave_coeff_direct(0, &zeta),
                worst,
                tolerance,
            )
        })
        .collect()
}

/// Unit modulus and n-periodicity of the wave amplitudes, at `1e-12`.
pub fn sweep_unit_modulus_periodicity(max: u64) -> Vec<VerificationReport> {
    coprime_pairs(max)
        .par_iter()
        .map(|&(p, q)| {
            let zeta = FractionalDistance::new(p, q).unwrap();
            let mut worst = 0.0f64;
            for n in 0..q as i64 {
                let a = wave_coeff_direct(n, &zeta);
                worst = worst.max((a.norm() - 1.0).abs());
                worst = worst.max((wave_coeff_direct(n + q as i64, &zeta) - a).norm());
            }
            VerificationReport::new(
                "unit-modulus-periodicity",
                format!("zeta={p}/{q}"),
                wave_coeff_direct(0, &zeta),
                ComplexAmp::new(1.0, 0.0),
                worst,
                1e-12,
            )
        })
        .collect()
}

/// Closed forms against the direct oracles, both pictures.
pub fn sweep_coefficient_closed_forms(max: u64, tolerance: f64) -> Vec<VerificationReport> {
    coprime_pairs(max)
        .par_iter()
        .flat_map(|&(p, q)| {
            let zeta = FractionalDistance::new(p, q).unwrap();
            let wave_worst = (0..q as i64)
                .map(|n| (wave_coeff_direct(n, &zeta) - wave_coeff_closed(n, &zeta).unwrap()).norm())
                .fold(0.0, f64::max);
            let particle_worst = (0..q as i64)
                .map(|n| {
                    (particle_coeff_direct(n, &zeta) - particle_coeff_closed(n, &zeta).unwrap())
                        .norm()
                })
                .fold(0.0, f64::max);
            vec![
                VerificationReport::new(
                    "wave-closed-form",
                    format!("zeta={p}/{q}, n=0..{q}"),
                    wave_coeff_closed(0, &zeta).unwrap(),
                    wave_coeff_direct(0, &zeta),
                    wave_worst,
                    tolerance,
                ),
                VerificationReport::new(
                    "particle-closed-form",
                    format!("zeta={p}/{q}, n=0..{q}"),
                    particle_coeff_closed(0, &zeta).unwrap(),
                    particle_coeff_direct(0, &zeta),
                    particle_worst,
                    tolerance,
                ),
            ]
        })
        .collect()
}

/// All parity-admissible `c` in `[-2ab, 2ab]` for `1 <= a, b <= max`.
pub fn sweep_reciprocity(max: u64, tolerance: f64) -> Vec<VerificationReport> {
    let pairs: Vec<(i64, u64)> =
        (1..=max as i64).flat_map(|a| (1..=max).map(move |b| (a, b))).collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let span = 2 * a * b as i64;
            let mut worst = 0.0f64;
            let mut count = 0u64;
            for c in -span..=span {
                let params = GaussSumParams::new(a, b, c).unwrap();
                if params.parity_class() == ParityClass::Mixed {
                    continue;
                }
                let r = verify_reciprocity(&params, tolerance).unwrap();
                worst = worst.max(r.residual);
                count += 1;
            }
            VerificationReport::new(
                "gauss-reciprocity",
                format!("a={a}, b={b}, {count} admissible c"),
                ComplexAmp::new(count as f64, 0.0),
                ComplexAmp::new(count as f64, 0.0),
                worst,
                tolerance,
            )
        })
        .collect()
}

/// Closed Gauss sums against the direct oracle across all three parity
/// branches; `c` spans `[-2ab, 2ab]` on a coarse stride.
pub fn sweep_gauss_closed_forms(max: u64, tolerance: f64) -> Vec<VerificationReport> {
    let mut triples: Vec<GaussSumParams> = Vec::new();
    for a in 1..=max as i64 {
        for b in 1..=max {
            if gcd(a as u64, b) != 1 {
                continue;
            }
            let span = 2 * a * b as i64;
            let stride = ((a * b as i64) / 2).max(1);
            let mut c = -span;
            while c <= span {
                let params = GaussSumParams::new(a, b, c).unwrap();
                if params.parity_class() != ParityClass::Mixed
                    && gauss_sum_closed(&params).is_ok()
                {
                    triples.push(params);
                }
                c += stride;
            }
        }
    }
    triples
        .par_iter()
        .map(|params| {
            let direct = gauss_sum_direct(params).unwrap();
            let closed = gauss_sum_closed(params).unwrap();
            let branch = match (params.a % 2, params.b % 2) {
                (0, _) => "even-odd",
                (_, 0) => "odd-even",
                _ => "odd-odd",
            };
            VerificationReport::new(
                format!("gauss-closed-form[{branch}]"),
                format!("a={}, b={}, c={}", params.a, params.b, params.c),
                closed,
                direct,
                (closed - direct).norm(),
                tolerance,
            )
        })
        .collect()
}

/// Character-sum sign check over squarefree odd `b <= max`.
pub fn sweep_char_sums(max: u64, tolerance: f64) -> Vec<VerificationReport> {
    let squarefree = |b: u64| (2..b).take_while(|d| d * d <= b).all(|d| !b.is_multiple_of(d * d));
    (3..=max)
        .step_by(2)
        .filter(|&b| squarefree(b))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&b| {
            let direct = classical_char_sum(b).unwrap();
            let closed = classical_char_sum_closed(b).unwrap();
            VerificationReport::new(
                "char-sum-sign",
                format!("b={b}"),
                direct,
                closed,
                (direct - closed).norm(),
                tolerance,
            )
        })
        .collect()
}

/// Exact Bezout identity and Jacobi reciprocity on a seeded random sample of
/// coprime pairs below `limit`.
pub fn sweep_bezout(limit: u64, count: usize, seed: u64) -> Vec<VerificationReport> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(count);
    let mut produced = 0usize;
    while produced < count {
        let p = rng.gen_range(1..=limit);
        let q = rng.gen_range(1..=limit);
        if gcd(p, q) != 1 {
            continue;
        }
        let (x, y) = bezout_pair(p, q).unwrap();
        let identity =
            x.value as u128 * q as u128 + y.value as u128 * p as u128 == 1 + p as u128 * q as u128;
        let mut violations = (!identity) as u64;
        if p % 2 == 1 && q % 2 == 1 {
            let jac = jacobi_symbol(p as i64, q).unwrap() * jacobi_symbol(q as i64, p).unwrap();
            let sign = if (((p - 1) / 2) * ((q - 1) / 2)) % 2 == 1 { -1 } else { 1 };
            violations += (jac != sign) as u64;
        }
        reports.push(VerificationReport::exact(
            "bezout-jacobi",
            format!("p={p}, q={q}"),
            violations,
        ));
        produced += 1;
    }
    reports
}

/// Exact congruence chain behind the complementarity constant, every
/// coprime pair up to `max`.
pub fn sweep_phase_identities(max: u64) -> Vec<VerificationReport> {
    coprime_pairs(max)
        .par_iter()
        .flat_map(|&(p, q)| {
            let zeta = FractionalDistance::new(p, q).unwrap();
            verify_phase_identities(&zeta).unwrap()
        })
        .collect()
}
