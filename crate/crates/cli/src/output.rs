//! Serialization helpers: 12-significant-digit numbers, CSV/JSON coefficient
//! tables, and binary PGM encoding.

use gauss_talbot::CarpetGrid;

/// Rounds to the printed precision (12 significant digits) so CSV and JSON
/// carry identical values.
pub fn sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap()
}

pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

/// One output row of the `coeff` subcommand.
#[derive(Debug, serde::Serialize)]
pub struct CoeffRow {
    pub n: i64,
    pub q: u64,
    pub p: u64,
    pub picture: String,
    pub method: String,
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub arg_over_pi: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

pub const COEFF_HEADER: &str = "n,q,p,picture,method,re,im,modulus,arg_over_pi,residual";

impl CoeffRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.q,
            self.p,
            self.picture,
            self.method,
            fmt12(self.re),
            fmt12(self.im),
            fmt12(self.modulus),
            fmt12(self.arg_over_pi),
            self.residual.map(fmt12).unwrap_or_default()
        )
    }
}

/// 8-bit binary PGM, intensities max-normalized per image, zeta increasing
/// downward and xi increasing rightward. Byte-deterministic for a fixed grid.
pub fn encode_pgm(grid: &CarpetGrid) -> Vec<u8> {
    let (w, h) = (grid.cols(), grid.rows());
    let mut out = format!("P5\n{w} {h}\n255\n").into_bytes();
    let max = grid.intensities.iter().cloned().fold(0.0f64, f64::max);
    out.reserve(w * h);
    for &v in &grid.intensities {
        let byte = if max > 0.0 { (v / max * 255.0).round() as u8 } else { 0 };
        out.push(byte);
    }
    out
}

/// Long-form CSV of raw intensities: one row per (zeta, xi) sample.
pub fn carpet_csv(grid: &CarpetGrid) -> String {
    let mut s = String::from("zeta,xi,intensity\n");
    for (i, &zeta) in grid.zetas.iter().enumerate() {
        let row = grid.row(i);
        for (j, &v) in row.iter().enumerate() {
            s.push_str(&format!(
                "{},{},{}\n",
                fmt12(zeta),
                fmt12(grid.xi_start() + j as f64 * grid.xi_step()),
                fmt12(v)
            ));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_round_trip() {
        let x = std::f64::consts::PI;
        assert_eq!(sig12(x), 3.14159265359);
        assert_eq!(fmt12(x).parse::<f64>().unwrap(), sig12(x));
    }

    #[test]
    fn pgm_layout() {
        use gauss_talbot::{CarpetSpec, Route, ZetaAxis};
        let spec = CarpetSpec {
            xi_samples: 3,
            zeta_axis: ZetaAxis::Uniform { start: 0.1, stop: 0.2, count: 2 },
            n_trunc: 4,
            apod_width: 1.0,
            a_over_lambda: 10.0,
        };
        let grid = CarpetGrid {
            spec,
            route: Route::Wave,
            zetas: vec![0.1, 0.2],
            intensities: vec![0.0, 1.0, 2.0, 4.0, 3.0, 0.5],
        };
        let bytes = encode_pgm(&grid);
        assert!(bytes.starts_with(b"P5\n3 2\n255\n"));
        let pixels = &bytes[b"P5\n3 2\n255\n".len()..];
        assert_eq!(pixels, &[0u8, 64, 128, 255, 191, 32]);
    }
}
