//! Numerical propagation of the comb grating by three routes, carpet
//! rasterization, and peak extraction.
//!
//! The ideal comb is a sum of delta functions; rendering needs a
//! regularization. A Gaussian window over the mode index `n` is used, which
//! is the same thing as convolving the comb with a fixed Gaussian in `xi`:
//! it broadens the peaks without touching the quadratic-phase structure.
//! The truncation error beyond `|n| = N` is bounded by
//! `exp(-N^2 / (2 w^2))`.

use crate::error::{Error, Result};
use crate::numtheory::FractionalDistance;
use crate::phase::ComplexAmp;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Propagation route for a carpet render.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Paraxial mode expansion (quadratic phase in the mode index).
    Wave,
    /// Full Helmholtz propagation factor, evanescent modes damped.
    Exact,
    /// Paraxial path sum over slits.
    Path,
}

/// Rows of the carpet: either exact rationals (resolution requirements are
/// validated against their denominators) or a uniform real grid.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZetaAxis {
    Fractions(Vec<FractionalDistance>),
    Uniform { start: f64, stop: f64, count: usize },
}

/// Sampling and truncation parameters for a carpet render.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CarpetSpec {
    pub xi_samples: usize,
    pub zeta_axis: ZetaAxis,
    pub n_trunc: u32,
    pub apod_width: f64,
    pub a_over_lambda: f64,
}

impl CarpetSpec {
    /// Checks the resolution invariants: the truncation window must separate
    /// the sub-images of every rational row (`N >= 4 max q`) and the
    /// apodization must fit inside it (`w <= N/3`).
    pub fn validate(&self, route: Route) -> Result<()> {
        if self.xi_samples == 0 {
            return Err(Error::InvalidSpec("xi_samples must be >= 1".into()));
        }
        if self.n_trunc == 0 {
            return Err(Error::InvalidSpec("n_trunc must be >= 1".into()));
        }
        if self.apod_width.is_nan() || self.apod_width <= 0.0 {
            return Err(Error::InvalidSpec("apod_width must be positive".into()));
        }
        if self.apod_width > self.n_trunc as f64 / 3.0 {
            return Err(Error::InvalidSpec(format!(
                "apod_width {} exceeds n_trunc/3 = {}",
                self.apod_width,
                self.n_trunc as f64 / 3.0
            )));
        }
        if self.a_over_lambda.is_nan() || self.a_over_lambda <= 0.0 {
            return Err(Error::InvalidSpec("a_over_lambda must be positive".into()));
        }
        if let ZetaAxis::Fractions(fracs) = &self.zeta_axis {
            if fracs.is_empty() {
                return Err(Error::InvalidSpec("zeta list is empty".into()));
            }
            let max_q = fracs.iter().map(|z| z.q()).max().unwrap();
            if (self.n_trunc as u64) < 4 * max_q {
                return Err(Error::InvalidSpec(format!(
                    "n_trunc {} cannot separate q = {max_q} sub-images (need >= {})",
                    self.n_trunc,
                    4 * max_q
                )));
            }
        }
        if route == Route::Path && self.zeta_values().contains(&0.0) {
            return Err(Error::PathAtGratingPlane);
        }
        Ok(())
    }

    pub fn zeta_values(&self) -> Vec<f64> {
        match &self.zeta_axis {
            ZetaAxis::Fractions(fracs) => fracs.iter().map(|z| z.value()).collect(),
            ZetaAxis::Uniform { start, stop, count } => {
                if *count == 1 {
                    vec![*start]
                } else {
                    (0..*count)
                        .map(|i| start + (stop - start) * i as f64 / (*count as f64 - 1.0))
                        .collect()
                }
            }
        }
    }

    fn window(&self, n: i64) -> f64 {
        let x = n as f64 / self.apod_width;
        (-0.5 * x * x).exp()
    }
}

/// Paraxial mode-expansion field
/// `sum_n w(n) exp(2 pi i xi n) exp(-i pi zeta n^2)`.
pub fn field_paraxial_wave(xi: f64, zeta: f64, spec: &CarpetSpec) -> ComplexAmp {
    let n_max = spec.n_trunc as i64;
    let mut acc = ComplexAmp::new(0.0, 0.0);
    for n in -n_max..=n_max {
        let nf = n as f64;
        let theta = 2.0 * PI * xi * nf - PI * zeta * nf * nf;
        acc += spec.window(n) * ComplexAmp::new(theta.cos(), theta.sin());
    }
    acc
}

/// Helmholtz field with the full propagation factor
/// `exp(2 pi i zeta (a/L)^2 sqrt(1 - (n L / a)^2))`, `L` the wavelength.
/// For `|n| > a/L` the root is imaginary and the mode decays exponentially
/// with `zeta` (the branch is fixed so the field damps, not grows).
/// The global on-axis phase is kept; it cancels in intensities.
pub fn field_exact_helmholtz(xi: f64, zeta: f64, spec: &CarpetSpec) -> ComplexAmp {
    let n_max = spec.n_trunc as i64;
    let ratio = spec.a_over_lambda;
    let scale = 2.0 * PI * zeta * ratio * ratio;
    let mut acc = ComplexAmp::new(0.0, 0.0);
    for n in -n_max..=n_max {
        let nf = n as f64;
        let transverse = nf / ratio;
        let lateral = 2.0 * PI * xi * nf;
        let term = if transverse.abs() <= 1.0 {
            let theta = lateral + scale * (1.0 - transverse * transverse).sqrt();
            ComplexAmp::new(theta.cos(), theta.sin())
        } else {
            let damp = (-scale * (transverse * transverse - 1.0).sqrt()).exp();
            damp * ComplexAmp::new(lateral.cos(), lateral.sin())
        };
        acc += spec.window(n) * term;
    }
    acc
}

/// Paraxial path sum over slits
/// `sum_n w(n) exp(i pi (2 xi n + n^2 + xi^2) / zeta)`; rejects `zeta = 0`,
/// where every path phase diverges.
pub fn field_paraxial_path(xi: f64, zeta: f64, spec: &CarpetSpec) -> Result<ComplexAmp> {
    if zeta == 0.0 {
        return Err(Error::PathAtGratingPlane);
    }
    let n_max = spec.n_trunc as i64;
    let mut acc = ComplexAmp::new(0.0, 0.0);
    for n in -n_max..=n_max {
        let nf = n as f64;
        let theta = PI * (2.0 * xi * nf + nf * nf + xi * xi) / zeta;
        acc += spec.window(n) * ComplexAmp::new(theta.cos(), theta.sin());
    }
    Ok(acc)
}

/// A rendered carpet: intensities over the (zeta, xi) grid, row-major, with
/// zeta increasing by row and xi increasing by column over `[-1/2, 1/2)`.
#[derive(Debug, Clone)]
pub struct CarpetGrid {
    pub spec: CarpetSpec,
    pub route: Route,
    pub zetas: Vec<f64>,
    pub intensities: Vec<f64>,
}

impl CarpetGrid {
    pub fn rows(&self) -> usize {
        self.zetas.len()
    }

    pub fn cols(&self) -> usize {
        self.spec.xi_samples
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let w = self.cols();
        &self.intensities[i * w..(i + 1) * w]
    }

    pub fn xi_start(&self) -> f64 {
        -0.5
    }

    pub fn xi_step(&self) -> f64 {
        1.0 / self.spec.xi_samples as f64
    }
}

/// Renders `|field|^2` over the fundamental cell for every zeta row.
/// Rows are computed independently (in parallel) and assembled in order,
/// so the output is byte-deterministic for a fixed spec.
pub fn render_carpet(spec: &CarpetSpec, route: Route) -> Result<CarpetGrid> {
    spec.validate(route)?;
    let zetas = spec.zeta_values();
    let xi_samples = spec.xi_samples;
    let rows: Result<Vec<Vec<f64>>> = zetas
        .par_iter()
        .map(|&zeta| {
            (0..xi_samples)
                .map(|j| {
                    let xi = -0.5 + j as f64 / xi_samples as f64;
                    let field = match route {
                        Route::Wave => field_paraxial_wave(xi, zeta, spec),
                        Route::Exact => field_exact_helmholtz(xi, zeta, spec),
                        Route::Path => field_paraxial_path(xi, zeta, spec)?,
                    };
                    Ok(field.norm_sqr())
                })
                .collect()
        })
        .collect();
    let intensities = rows?.concat();
    Ok(CarpetGrid { spec: spec.clone(), route, zetas, intensities })
}

/// A refined intensity maximum.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct Peak {
    /// Position in the fundamental cell `[-1/2, 1/2)`.
    pub position: f64,
    /// Parabola-refined height.
    pub height: f64,
}

/// Peaks found in one intensity row, with the expected count recorded so a
/// shortfall can be flagged downstream instead of raising.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PeakReport {
    pub expected: usize,
    pub peaks: Vec<Peak>,
}

impl PeakReport {
    pub fn is_complete(&self) -> bool {
        self.peaks.len() == self.expected
    }
}

/// Local maxima above half the row maximum, refined to sub-sample accuracy
/// by a three-point parabola. The row is treated as periodic over the unit
/// cell. A constant row has no peaks.
pub fn extract_peaks(row: &[f64], xi_start: f64, xi_step: f64, expected: usize) -> PeakReport {
    let len = row.len();
    let mut peaks = Vec::new();
    if len >= 3 {
        let max = row.iter().cloned().fold(f64::MIN, f64::max);
        let min = row.iter().cloned().fold(f64::MAX, f64::min);
        if max > min {
            let threshold = 0.5 * max;
            for i in 0..len {
                let prev = row[(i + len - 1) % len];
                let next = row[(i + 1) % len];
                let here = row[i];
                if here > prev && here >= next && here >= threshold {
                    let denom = prev - 2.0 * here + next;
                    let (delta, height) = if denom.abs() > 1e-300 {
                        let d = ((prev - next) / (2.0 * denom)).clamp(-0.5, 0.5);
                        (d, here - (prev - next) * (prev - next) / (8.0 * denom))
                    } else {
                        (0.0, here)
                    };
                    let pos = xi_start + (i as f64 + delta) * xi_step;
                    let wrapped = (pos + 0.5).rem_euclid(1.0) - 0.5;
                    peaks.push(Peak { position: wrapped, height });
                }
            }
        }
    }
    PeakReport { expected, peaks }
}

/// Wrap-around distance between two cell positions.
pub fn cell_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::talbot::image_positions;

    fn spec_with(zetas: Vec<FractionalDistance>, n_trunc: u32, apod: f64) -> CarpetSpec {
        CarpetSpec {
            xi_samples: 512,
            zeta_axis: ZetaAxis::Fractions(zetas),
            n_trunc,
            apod_width: apod,
            a_over_lambda: 1000.0,
        }
    }

    fn frac(p: u64, q: u64) -> FractionalDistance {
        FractionalDistance::new(p, q).unwrap()
    }

    #[test]
    fn wave_field_trivial_points() {
        let mut spec = spec_with(vec![frac(1, 2)], 1, 0.333);
        spec.n_trunc = 1;
        // single n = 0 term once the window kills the rest
        spec.apod_width = 1e-6;
        let f = field_paraxial_wave(0.3, 0.7, &spec);
        assert!((f - ComplexAmp::new(1.0, 0.0)).norm() < 1e-12);

        // at zeta = 0 every phase is unity at xi = 0: peak of height sum w(n)
        let spec = spec_with(vec![frac(1, 2)], 64, 12.0);
        let total: f64 = (-64i64..=64).map(|n| spec.window(n)).sum();
        let f = field_paraxial_wave(0.0, 0.0, &spec);
        assert!((f.re - total).abs() < 1e-9 && f.im.abs() < 1e-12);

        // exact route coincides with the comb at zeta = 0
        let g = field_exact_helmholtz(0.0, 0.0, &spec);
        assert!((g - f).norm() < 1e-9);
    }

    #[test]
    fn path_field_trivial_points() {
        let mut spec = spec_with(vec![frac(1, 2)], 1, 0.333);
        spec.apod_width = 1e-6;
        let f = field_paraxial_path(0.0, 0.5, &spec).unwrap();
        assert!((f - ComplexAmp::new(1.0, 0.0)).norm() < 1e-12);
        assert!(matches!(
            field_paraxial_path(0.1, 0.0, &spec),
            Err(Error::PathAtGratingPlane)
        ));
    }

    #[test]
    fn evanescent_modes_decay() {
        // with a_over_lambda < 1 only n = 0 propagates; every other mode
        // damps, so the field tends to the n = 0 weight as zeta grows
        let spec = CarpetSpec {
            xi_samples: 8,
            zeta_axis: ZetaAxis::Uniform { start: 0.0, stop: 1.0, count: 2 },
            n_trunc: 8,
            apod_width: 2.0,
            a_over_lambda: 0.5,
        };
        let near = field_exact_helmholtz(0.0, 0.1, &spec).norm();
        let mid = field_exact_helmholtz(0.0, 0.5, &spec).norm();
        let far = field_exact_helmholtz(0.0, 5.0, &spec).norm();
        assert!(near > mid && mid > far);
        assert!((far - spec.window(0)).abs() < 1e-6);
    }

    #[test]
    fn full_revival_is_half_shifted() {
        // at zeta = 1 (p = q = 1, odd) the image sits at xi = -1/2 with the
        // same magnitude as the zeta = 0 comb peak at xi = 0
        let spec = spec_with(vec![frac(1, 1)], 64, 12.0);
        let comb = field_paraxial_wave(0.0, 0.0, &spec).norm();
        let revived = field_paraxial_wave(-0.5, 1.0, &spec).norm();
        assert!((revived - comb).abs() / comb < 1e-2);
    }

    #[test]
    fn spec_validation() {
        let ok = spec_with(vec![frac(2, 3)], 64, 12.0);
        assert!(ok.validate(Route::Wave).is_ok());

        let bad = spec_with(vec![frac(1, 30)], 64, 12.0);
        assert!(matches!(bad.validate(Route::Wave), Err(Error::InvalidSpec(_))));

        let bad = spec_with(vec![frac(1, 2)], 64, 40.0);
        assert!(matches!(bad.validate(Route::Wave), Err(Error::InvalidSpec(_))));

        let zero_row = CarpetSpec {
            xi_samples: 8,
            zeta_axis: ZetaAxis::Uniform { start: 0.0, stop: 1.0, count: 3 },
            n_trunc: 32,
            apod_width: 8.0,
            a_over_lambda: 1000.0,
        };
        assert!(matches!(zero_row.validate(Route::Path), Err(Error::PathAtGratingPlane)));
        assert!(zero_row.validate(Route::Wave).is_ok());
    }

    #[test]
    fn render_peak_counts() {
        let zetas = vec![frac(1, 3), frac(2, 3), frac(1, 2), frac(1, 1)];
        let spec = CarpetSpec {
            xi_samples: 1024,
            zeta_axis: ZetaAxis::Fractions(zetas.clone()),
            n_trunc: 128,
            apod_width: 24.0,
            a_over_lambda: 1000.0,
        };
        let grid = render_carpet(&spec, Route::Wave).unwrap();
        for (i, z) in zetas.iter().enumerate() {
            let report = extract_peaks(grid.row(i), grid.xi_start(), grid.xi_step(), z.q() as usize);
            assert!(
                report.is_complete(),
                "zeta={z}: found {} peaks, expected {}",
                report.peaks.len(),
                report.expected
            );
            let predicted = image_positions(z);
            for peak in &report.peaks {
                let best = predicted
                    .positions
                    .iter()
                    .map(|c| cell_distance(peak.position, c.as_f64()))
                    .fold(f64::MAX, f64::min);
                assert!(best < 1.5 * grid.xi_step(), "zeta={z}: peak at {} off by {best}", peak.position);
            }
        }
    }

    #[test]
    fn render_single_cell_composes() {
        let spec = CarpetSpec {
            xi_samples: 1,
            zeta_axis: ZetaAxis::Fractions(vec![frac(1, 2)]),
            n_trunc: 32,
            apod_width: 8.0,
            a_over_lambda: 1000.0,
        };
        let grid = render_carpet(&spec, Route::Wave).unwrap();
        assert_eq!(grid.intensities.len(), 1);
        let expect = field_paraxial_wave(-0.5, 0.5, &spec).norm_sqr();
        assert_eq!(grid.intensities[0], expect);
    }

    #[test]
    fn render_determinism() {
        let spec = spec_with(vec![frac(1, 2), frac(2, 3)], 64, 12.0);
        let g1 = render_carpet(&spec, Route::Wave).unwrap();
        let g2 = render_carpet(&spec, Route::Wave).unwrap();
        assert_eq!(g1.intensities, g2.intensities);
    }

    #[test]
    fn row_power_is_zeta_independent() {
        // Parseval: the row integral equals sum w(n)^2 for the unitary routes
        let spec = CarpetSpec {
            xi_samples: 512,
            zeta_axis: ZetaAxis::Fractions(vec![frac(1, 3), frac(1, 2), frac(7, 8), frac(1, 1)]),
            n_trunc: 64,
            apod_width: 12.0,
            a_over_lambda: 1000.0,
        };
        let grid = render_carpet(&spec, Route::Wave).unwrap();
        let mut totals = Vec::new();
        for i in 0..grid.rows() {
            totals.push(grid.row(i).iter().sum::<f64>() * grid.xi_step());
        }
        let first = totals[0];
        for t in &totals {
            assert!((t - first).abs() / first < 0.01, "row powers {totals:?}");
        }
    }

    #[test]
    fn extract_peaks_degenerate_rows() {
        let flat = vec![2.5; 100];
        let report = extract_peaks(&flat, -0.5, 0.01, 1);
        assert!(report.peaks.is_empty());
        assert!(!report.is_complete());

        let report = extract_peaks(&[1.0, 2.0], -0.5, 0.5, 1);
        assert!(report.peaks.is_empty());
    }

    #[test]
    fn extract_peaks_wraparound() {
        // peak centered on the cell edge (index 0)
        let n = 64usize;
        let row: Vec<f64> = (0..n)
            .map(|i| {
                let x: f64 = -0.5 + i as f64 / n as f64;
                let d = cell_distance(x, -0.5);
                (-d * d / 0.002).exp()
            })
            .collect();
        let report = extract_peaks(&row, -0.5, 1.0 / n as f64, 1);
        assert_eq!(report.peaks.len(), 1);
        assert!(cell_distance(report.peaks[0].position, -0.5) < 1.0 / n as f64);
    }
}
