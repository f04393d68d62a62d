//! Pass/fail records produced by the identity-verification routines.

use crate::phase::ComplexAmp;

/// Outcome of checking one identity at one parameter point (or the worst
/// case over a sweep). `pass` holds exactly when `residual < tolerance`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: String,
    pub lhs: ComplexAmp,
    pub rhs: ComplexAmp,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(
        identity: impl Into<String>,
        params: impl Into<String>,
        lhs: ComplexAmp,
        rhs: ComplexAmp,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            identity: identity.into(),
            params: params.into(),
            lhs,
            rhs,
            residual,
            tolerance,
            pass: residual < tolerance,
        }
    }

    /// Report for an exact integer check: `violations` counts failing cases,
    /// so any nonzero count fails.
    pub fn exact(
        identity: impl Into<String>,
        params: impl Into<String>,
        violations: u64,
    ) -> Self {
        Self::new(
            identity,
            params,
            ComplexAmp::new(violations as f64, 0.0),
            ComplexAmp::new(0.0, 0.0),
            violations as f64,
            1.0,
        )
    }
}
