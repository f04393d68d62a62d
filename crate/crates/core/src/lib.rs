//! Exact-as-possible Gauss-sum computation of fractional revival
//! amplitudes, two independent ways, and the arithmetic identities that
//! make them agree.
//!
//! A plane wave through a periodic comb grating revives at rational
//! multiples `zeta = p/q` of the revival length: the field splits into `q`
//! shifted copies per period, each weighted by a unit-modulus amplitude.
//! This crate computes those amplitudes
//!
//! * from the mode expansion of the propagated field (wave picture), and
//! * from the sum over straight-ray paths through the slits (particle
//!   picture),
//!
//! each both by direct Gauss summation and by number-theoretic closed form
//! (Jacobi symbols and modular inverses). The two pictures agree up to a
//! fixed eighth-turn phase, and that agreement is an instance of the
//! reciprocity law of quadratic Gauss sums, verified here exactly along
//! with the Bezout and congruence chain that proves it.
//!
//! All exponents are carried as exact rationals mod 2 ([`PhaseRational`])
//! and turned into floating point only at evaluation, so residuals sit at
//! rounding level. The [`carpet`] module renders intensity carpets from the
//! numerically propagated comb by three routes and locates the revival
//! peaks for comparison against the analytic positions.

pub mod carpet;
pub mod errata;
mod error;
pub mod gauss_sums;
pub mod numtheory;
pub mod phase;
pub mod report;
pub mod suites;
pub mod talbot;

pub use carpet::{
    extract_peaks, render_carpet, CarpetGrid, CarpetSpec, Peak, PeakReport, Route, ZetaAxis,
};
pub use error::{Error, Result};
pub use gauss_sums::{GaussSumParams, ParityClass, DEFAULT_TOLERANCE};
pub use numtheory::{FractionalDistance, ModInverse};
pub use phase::{ComplexAmp, PhaseRational};
pub use report::VerificationReport;
pub use talbot::{CoefficientRecord, EvalMethod, ImagePositions, Picture};
