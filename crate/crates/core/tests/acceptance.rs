//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Tolerances are pinned here, not configurable: 1e-9 for floating-point
//! identity residuals at desk scale, 1e-12 for single-sum properties, exact
//! integer equality where the identity is arithmetic.

use gauss_talbot::carpet::{cell_distance, extract_peaks, render_carpet, CarpetSpec, Route, ZetaAxis};
use gauss_talbot::numtheory::FractionalDistance;
use gauss_talbot::suites;
use gauss_talbot::talbot::image_positions;
use std::time::Instant;

const SWEEP_TOL: f64 = 1e-9;

fn report(criterion: &str, pass: bool, detail: String) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_complementarity_sweep() {
    let start = Instant::now();
    let reports = suites::sweep_complementarity(50, SWEEP_TOL);
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    let pass = reports.iter().all(|r| r.pass);
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "1 complementarity",
        pass && elapsed < 10.0,
        format!("{} coprime pairs, max residual {worst:.3e}, {elapsed:.2}s", reports.len()),
    );
}

#[test]
fn criterion_2_coefficient_closed_forms() {
    let reports = suites::sweep_coefficient_closed_forms(50, SWEEP_TOL);
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    let pass = reports.iter().all(|r| r.pass);
    report(
        "2 closed-form coefficients",
        pass,
        format!("{} picture/pair checks, max residual {worst:.3e}", reports.len()),
    );
}

#[test]
fn criterion_3_gauss_reciprocity() {
    let start = Instant::now();
    let reports = suites::sweep_reciprocity(40, SWEEP_TOL);
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    let triples: f64 = reports.iter().map(|r| r.lhs.re).sum();
    let pass = reports.iter().all(|r| r.pass);
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "3 gauss reciprocity",
        pass && elapsed < 60.0,
        format!("{triples:.0} admissible triples, max residual {worst:.3e}, {elapsed:.2}s"),
    );
}

#[test]
fn criterion_4_gauss_closed_forms() {
    let reports = suites::sweep_gauss_closed_forms(40, SWEEP_TOL);
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    let count_branch = |tag: &str| reports.iter().filter(|r| r.identity.contains(tag)).count();
    let branches =
        [count_branch("even-odd"), count_branch("odd-even"), count_branch("odd-odd")];
    let pass =
        reports.iter().all(|r| r.pass) && reports.len() >= 1000 && branches.iter().all(|&n| n > 0);
    report(
        "4 gauss closed forms",
        pass,
        format!(
            "{} triples (branches {}/{}/{}), max residual {worst:.3e}",
            reports.len(),
            branches[0],
            branches[1],
            branches[2]
        ),
    );
}

#[test]
fn criterion_5_char_sum_signs() {
    let reports = suites::sweep_char_sums(199, SWEEP_TOL);
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    let pass = reports.iter().all(|r| r.pass);
    report(
        "5 character-sum signs",
        pass,
        format!("{} squarefree odd moduli, max residual {worst:.3e}", reports.len()),
    );
}

#[test]
fn criterion_6_bezout_and_jacobi() {
    let reports = suites::sweep_bezout(10_000, 1000, 0x5eed);
    let pass = reports.len() >= 1000 && reports.iter().all(|r| r.pass);
    report(
        "6 bezout + jacobi reciprocity",
        pass,
        format!("{} random coprime pairs <= 10^4, exact", reports.len()),
    );
}

#[test]
fn criterion_7_unit_modulus_periodicity() {
    let reports = suites::sweep_unit_modulus_periodicity(50);
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    let pass = reports.iter().all(|r| r.pass);
    report(
        "7 unit modulus + periodicity",
        pass,
        format!("{} pairs, max deviation {worst:.3e} (tol 1e-12)", reports.len()),
    );
}

fn criterion_zetas() -> Vec<FractionalDistance> {
    [(1u64, 1u64), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5)]
        .iter()
        .map(|&(p, q)| FractionalDistance::new(p, q).unwrap())
        .collect()
}

#[test]
fn criterion_8_carpet_structure() {
    let start = Instant::now();
    let zetas = criterion_zetas();
    let spec = CarpetSpec {
        xi_samples: 2048,
        zeta_axis: ZetaAxis::Fractions(zetas.clone()),
        n_trunc: 256,
        apod_width: 48.0,
        a_over_lambda: 1000.0,
    };
    let wave = render_carpet(&spec, Route::Wave).unwrap();
    let path = render_carpet(&spec, Route::Path).unwrap();
    let step = wave.xi_step();
    let mut pass = true;
    let mut detail = Vec::new();
    for (i, zeta) in zetas.iter().enumerate() {
        let q = zeta.q() as usize;
        let predicted = image_positions(zeta);

        for (route_name, grid) in [("wave", &wave), ("path", &path)] {
            let found = extract_peaks(grid.row(i), grid.xi_start(), step, q);
            if found.peaks.len() != q {
                pass = false;
                detail.push(format!("{route_name} zeta={zeta}: {} peaks", found.peaks.len()));
                continue;
            }
            // every peak within 1.5 grid steps of a predicted position
            for peak in &found.peaks {
                let off = predicted
                    .positions
                    .iter()
                    .map(|c| cell_distance(peak.position, c.as_f64()))
                    .fold(f64::MAX, f64::min);
                if off > 1.5 * step {
                    pass = false;
                    detail.push(format!("{route_name} zeta={zeta}: peak off by {off:.2e}"));
                }
            }
            // peak heights mutually equal: 5% on the wave route, and the
            // path route must reproduce the same normalized peak set to 2%
            let heights: Vec<f64> = found.peaks.iter().map(|p| p.height).collect();
            let hmax = heights.iter().cloned().fold(f64::MIN, f64::max);
            let hmin = heights.iter().cloned().fold(f64::MAX, f64::min);
            let spread = (hmax - hmin) / hmax;
            let budget = if route_name == "wave" { 0.05 } else { 0.02 };
            if spread > budget {
                pass = false;
                detail.push(format!("{route_name} zeta={zeta}: height spread {spread:.3}"));
            }
        }

        // cross-route: same positions within 1.5 grid steps
        let wave_peaks = extract_peaks(wave.row(i), wave.xi_start(), step, q);
        let path_peaks = extract_peaks(path.row(i), path.xi_start(), step, q);
        for wp in &wave_peaks.peaks {
            let off = path_peaks
                .peaks
                .iter()
                .map(|pp| cell_distance(wp.position, pp.position))
                .fold(f64::MAX, f64::min);
            if off > 1.5 * step {
                pass = false;
                detail.push(format!("route mismatch zeta={zeta}: {off:.2e}"));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 30.0;
    report(
        "8 carpet structure",
        pass,
        if detail.is_empty() {
            format!("7 rows, q peaks each, wave/path peak sets agree, {elapsed:.2}s")
        } else {
            detail.join("; ")
        },
    );
}

#[test]
fn criterion_9_paraxial_limit() {
    // exact-route agreement holds in the small-angle window; n <= 64 keeps
    // the quartic propagation-phase error below the intensity budget
    let zetas = criterion_zetas();
    let spec = CarpetSpec {
        xi_samples: 2048,
        zeta_axis: ZetaAxis::Fractions(zetas.clone()),
        n_trunc: 64,
        apod_width: 8.0,
        a_over_lambda: 1000.0,
    };
    let wave = render_carpet(&spec, Route::Wave).unwrap();
    let exact = render_carpet(&spec, Route::Exact).unwrap();
    let mut worst = 0.0f64;
    for i in 0..wave.rows() {
        let wrow = wave.row(i);
        let erow = exact.row(i);
        let wmax = wrow.iter().cloned().fold(f64::MIN, f64::max);
        let emax = erow.iter().cloned().fold(f64::MIN, f64::max);
        for j in 0..wrow.len() {
            worst = worst.max((erow[j] / emax - wrow[j] / wmax).abs());
        }
    }
    report(
        "9 paraxial limit",
        worst < 0.005,
        format!("max normalized intensity deviation {worst:.3e} (budget 5e-3)"),
    );
}
