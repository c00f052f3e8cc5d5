use serde::{Deserialize, Serialize};

/// Absolute margin a strict inequality must clear once both sides have
/// converged.
pub const STRICT_MARGIN: f64 = 1e-9;

/// One verified (or refuted) numerical claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub claim: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    /// Exploratory records are reported but never fail a suite.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
}

impl Check {
    /// `lhs < rhs` with at least `min_margin` to spare.
    pub fn less(
        spec: impl Into<String>,
        alpha: Option<f64>,
        claim: impl Into<String>,
        lhs: f64,
        rhs: f64,
        min_margin: f64,
    ) -> Self {
        let margin = rhs - lhs;
        Check {
            spec: spec.into(),
            alpha,
            claim: claim.into(),
            lhs,
            rhs,
            margin,
            pass: margin > min_margin,
            exploratory: false,
        }
    }

    /// `|lhs - rhs| <= tol`. The margin is `tol - |lhs - rhs|`.
    pub fn close(
        spec: impl Into<String>,
        alpha: Option<f64>,
        claim: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        let err = (lhs - rhs).abs();
        Check {
            spec: spec.into(),
            alpha,
            claim: claim.into(),
            lhs,
            rhs,
            margin: tol - err,
            pass: err <= tol,
            exploratory: false,
        }
    }

    /// `|lhs - rhs| <= tol * max(1, |rhs|)`.
    pub fn close_rel(
        spec: impl Into<String>,
        alpha: Option<f64>,
        claim: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        Check::close(spec, alpha, claim, lhs, rhs, tol * rhs.abs().max(1.0))
    }

    /// A boolean claim. `lhs`/`rhs` are 1.0/0.0 encodings.
    pub fn holds(spec: impl Into<String>, alpha: Option<f64>, claim: impl Into<String>, ok: bool) -> Self {
        Check {
            spec: spec.into(),
            alpha,
            claim: claim.into(),
            lhs: ok as u8 as f64,
            rhs: 1.0,
            margin: if ok { 0.0 } else { -1.0 },
            pass: ok,
            exploratory: false,
        }
    }

    pub fn exploratory(mut self) -> Self {
        self.exploratory = true;
        self
    }

    /// Failed and counts towards the verdict.
    pub fn is_failure(&self) -> bool {
        !self.pass && !self.exploratory
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.is_failure())
}
