//! Perron-vector shape on the family `G(l, d-l)`: a sequential join
//! `K_1 v K_k v ... v K_k v K_{n_mid} v K_k v ... v K_k v K_1` whose cell `l`
//! is oversized.
//!
//! Profiles come from the symmetrized quotient eigenvector and are
//! cross-checked against the power-iteration Perron vector of the full graph.

use serde::{Deserialize, Serialize};

use crate::check::{Check, STRICT_MARGIN};
use crate::error::{Error, Result};
use crate::graph::{sequential_join, JoinSpec, MAX_ORDER};
use crate::quotient::quotient_perron;
use crate::spectra::{spectral_radius, Alpha};

/// Largest tolerated spread inside one cell of the full Perron vector.
pub const CELL_AGREEMENT: f64 = 1e-6;
/// Tolerance for the three-term recurrence on unit profiles.
pub const RECURRENCE_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GldSpec {
    pub d: usize,
    pub l: usize,
    pub k: usize,
    pub n_mid: usize,
}

impl GldSpec {
    pub fn new(d: usize, l: usize, k: usize, n_mid: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!("diameter {d} < 2")));
        }
        if l == 0 || l >= d {
            return Err(Error::InvalidParameter(format!("l = {l} outside 1..={}", d - 1)));
        }
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k = {k} < 2")));
        }
        if n_mid < 2 * k {
            return Err(Error::InvalidParameter(format!("n_mid = {n_mid} < 2k = {}", 2 * k)));
        }
        Ok(GldSpec { d, l, k, n_mid })
    }

    pub fn join_spec(&self) -> JoinSpec {
        let mut parts = vec![self.k; self.d + 1];
        parts[0] = 1;
        parts[self.d] = 1;
        parts[self.l] = self.n_mid;
        JoinSpec::new(parts).expect("cell sizes are positive")
    }

    pub fn order(&self) -> usize {
        2 + (self.d - 2) * self.k + self.n_mid
    }

    /// Same graph read from the other end: `l` becomes `d - l`.
    pub fn mirrored(&self) -> GldSpec {
        GldSpec {
            l: self.d - self.l,
            ..*self
        }
    }

    fn label(&self) -> String {
        format!("G(l={}, d={}, k={}, n_mid={})", self.l, self.d, self.k, self.n_mid)
    }
}

/// One Perron entry per cell, plus the spectral radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellProfile {
    pub lambda: f64,
    pub values: Vec<f64>,
}

pub fn cell_profile(spec: &GldSpec, a: Alpha) -> Result<CellProfile> {
    let join = spec.join_spec();
    let (lambda, values) = quotient_perron(&join, a);
    if spec.order() <= MAX_ORDER {
        let full = spectral_radius(&sequential_join(&join)?, a)?;
        for (cell, range) in join.cell_ranges().into_iter().enumerate() {
            let slice = &full.perron[range];
            let hi = slice.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let lo = slice.iter().cloned().fold(f64::INFINITY, f64::min);
            let spread = (hi - lo).max((hi - values[cell]).abs()).max((lo - values[cell]).abs());
            if spread > CELL_AGREEMENT {
                return Err(Error::SymmetryViolation { cell, spread });
            }
        }
    }
    Ok(CellProfile { lambda, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceRoots {
    pub t1: f64,
    pub t2: f64,
    /// Whether `t1 > 2`, which needs `lambda > ((7 - alpha)k - 2) / 2`.
    pub t1_exceeds_two: bool,
}

/// Roots of `(1-alpha)k t^2 + (2k alpha + k - 1 - lambda) t + (1-alpha)k = 0`.
pub fn recurrence_roots(lambda: f64, k: usize, a: Alpha) -> Result<RecurrenceRoots> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let kf = k as f64;
    if lambda <= 3.0 * kf - 1.0 {
        return Err(Error::OutOfRegime(format!(
            "lambda = {lambda} <= 3k - 1 = {}",
            3.0 * kf - 1.0
        )));
    }
    let al = a.value();
    let qa = (1.0 - al) * kf;
    let qb = 2.0 * kf * al + kf - 1.0 - lambda;
    let disc = qb * qb - 4.0 * qa * qa;
    let root = -qb + disc.sqrt();
    let t1 = root / (2.0 * qa);
    let t2 = 2.0 * qa / root;
    Ok(RecurrenceRoots {
        t1,
        t2,
        t1_exceeds_two: t1 > 2.0,
    })
}

/// Checks produced by one structural verification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerronReport {
    pub spec: GldSpec,
    pub alpha: f64,
    pub lambda: f64,
    pub profile: Vec<f64>,
    pub checks: Vec<Check>,
}

impl PerronReport {
    pub fn passed(&self) -> bool {
        crate::check::all_pass(&self.checks)
    }
}

/// Ordering claims on the profile of `G(l, d-l)` when `l >= d - l + 1`:
/// strict growth towards the big cell from both ends, `k x_{l-1} < n_l x_l`,
/// and for `l >= d - l + 2` the comparison of the two ends.
///
/// Also records the recurrence residuals and, as an exploratory record, the
/// variant `k x_{l-1} < alpha n_l x_l`.
pub fn check_monotonicity(spec: &GldSpec, a: Alpha) -> Result<PerronReport> {
    let (d, l) = (spec.d, spec.l);
    if l < d - l + 1 {
        return Err(Error::OutOfScope(format!("l = {l} < d - l + 1 = {}", d - l + 1)));
    }
    let prof = cell_profile(spec, a)?;
    let x = &prof.values;
    let name = spec.label();
    let al = Some(a.value());
    let mut checks = Vec::new();
    let strict = |claim: String, lhs: f64, rhs: f64| Check::less(name.clone(), al, claim, lhs, rhs, STRICT_MARGIN);

    for i in 1..l {
        checks.push(strict(format!("x{} < x{}", i - 1, i), x[i - 1], x[i]));
    }
    for i in l + 1..d {
        checks.push(strict(format!("x{} < x{}", i + 1, i), x[i + 1], x[i]));
    }
    let (kf, nl) = (spec.k as f64, spec.n_mid as f64);
    checks.push(strict(format!("k*x{} < n_l*x{}", l - 1, l), kf * x[l - 1], nl * x[l]));
    checks.push(
        strict(
            format!("k*x{} < alpha*n_l*x{}", l - 1, l),
            kf * x[l - 1],
            a.value() * nl * x[l],
        )
        .exploratory(),
    );
    if l >= d - l + 2 {
        checks.push(strict(format!("x0 < x{d}"), x[0], x[d]));
        for i in 1..d - l {
            checks.push(strict(format!("x{i} < x{}", d - i), x[i], x[d - i]));
        }
    }
    checks.extend(recurrence_checks(spec, a, &prof));
    Ok(PerronReport {
        spec: *spec,
        alpha: a.value(),
        lambda: prof.lambda,
        profile: prof.values.clone(),
        checks,
    })
}

/// Residuals of the three-term recurrence at every cell whose own size and
/// both neighbours' sizes equal `k`.
pub fn recurrence_checks(spec: &GldSpec, a: Alpha, prof: &CellProfile) -> Vec<Check> {
    let (d, l) = (spec.d, spec.l);
    let kf = spec.k as f64;
    let al = a.value();
    let x = &prof.values;
    let mut out = Vec::new();
    let cells = (2..l.saturating_sub(1)).chain(l + 2..d.saturating_sub(1));
    for i in cells {
        let r =
            (1.0 - al) * kf * x[i + 1] + (2.0 * kf * al + kf - 1.0 - prof.lambda) * x[i] + (1.0 - al) * kf * x[i - 1];
        out.push(Check::close(
            spec.label(),
            Some(al),
            format!("recurrence residual at cell {i}"),
            r,
            0.0,
            RECURRENCE_TOLERANCE,
        ));
    }
    out
}

/// Exploratory comparisons `x_{d-i+1} < x_i` for `i = 1..=d-l-1`, meaningful
/// only when the join is assumed maximal; every record is exploratory.
pub fn check_cross_inequalities(spec: &GldSpec, a: Alpha) -> Result<PerronReport> {
    let (d, l) = (spec.d, spec.l);
    if l < d - l + 2 {
        return Err(Error::OutOfScope(format!("l = {l} < d - l + 2 = {}", d - l + 2)));
    }
    let prof = cell_profile(spec, a)?;
    let x = &prof.values;
    let checks = (1..d - l)
        .map(|i| {
            Check::less(
                spec.label(),
                Some(a.value()),
                format!("x{} < x{i}", d - i + 1),
                x[d - i + 1],
                x[i],
                STRICT_MARGIN,
            )
            .exploratory()
        })
        .collect();
    Ok(PerronReport {
        spec: *spec,
        alpha: a.value(),
        lambda: prof.lambda,
        profile: prof.values.clone(),
        checks,
    })
}

/// Centred big cell (`l = d - l`): palindromic profile to 1e-8, recurrence
/// residuals, and the growth towards the centre as exploratory records.
pub fn check_centered(spec: &GldSpec, a: Alpha) -> Result<PerronReport> {
    let (d, l) = (spec.d, spec.l);
    if 2 * l != d {
        return Err(Error::OutOfScope(format!("l = {l} is not d / 2 for d = {d}")));
    }
    let prof = cell_profile(spec, a)?;
    let x = &prof.values;
    let name = spec.label();
    let al = Some(a.value());
    let mut checks: Vec<Check> = (0..l)
        .map(|i| Check::close(name.clone(), al, format!("x{i} = x{}", d - i), x[i], x[d - i], 1e-8))
        .collect();
    for i in 1..=l {
        checks.push(
            Check::less(
                name.clone(),
                al,
                format!("x{} < x{i}", i - 1),
                x[i - 1],
                x[i],
                STRICT_MARGIN,
            )
            .exploratory(),
        );
    }
    checks.extend(recurrence_checks(spec, a, &prof));
    Ok(PerronReport {
        spec: *spec,
        alpha: a.value(),
        lambda: prof.lambda,
        profile: prof.values.clone(),
        checks,
    })
}

/// Run [`check_monotonicity`] on `spec`, or on its mirror image when `spec`
/// has its big cell in the left half. A centred big cell satisfies neither
/// orientation and goes to [`check_centered`].
pub fn check_monotonicity_oriented(spec: &GldSpec, a: Alpha) -> Result<PerronReport> {
    if 2 * spec.l == spec.d {
        check_centered(spec, a)
    } else if spec.l < spec.d - spec.l + 1 {
        check_monotonicity(&spec.mirrored(), a)
    } else {
        check_monotonicity(spec, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn profile_shapes() {
        let p = cell_profile(&GldSpec::new(2, 1, 2, 5).unwrap(), al(0.4)).unwrap();
        assert!((p.values[0] - p.values[2]).abs() < 1e-12);
        assert!(p.values[0] < p.values[1]);

        let p = cell_profile(&GldSpec::new(4, 2, 2, 4).unwrap(), al(0.0)).unwrap();
        assert!((p.values[0] - p.values[4]).abs() < 1e-12);
        assert!((p.values[1] - p.values[3]).abs() < 1e-12);
    }

    #[test]
    fn roots_examples() {
        let r = recurrence_roots(7.0, 2, al(0.0)).unwrap();
        assert!((r.t1 - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!((r.t2 - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!(r.t1_exceeds_two);
        let r = recurrence_roots(6.0, 2, al(0.0)).unwrap();
        assert!((r.t1 - 2.0).abs() < 1e-14);
        assert!(!r.t1_exceeds_two || r.t1 - 2.0 < 1e-14);
        assert!(matches!(recurrence_roots(5.0, 2, al(0.0)), Err(Error::OutOfRegime(_))));
    }

    #[test]
    fn monotonicity_examples() {
        let r = check_monotonicity(&GldSpec::new(4, 3, 2, 4).unwrap(), al(0.2)).unwrap();
        assert!(r.passed(), "{:#?}", r.checks);
        let r = check_monotonicity(&GldSpec::new(5, 3, 2, 5).unwrap(), al(0.0)).unwrap();
        assert!(r.checks.iter().any(|c| c.claim == "k*x2 < n_l*x3" && c.pass));
        let r = check_monotonicity(&GldSpec::new(6, 4, 2, 4).unwrap(), al(0.5)).unwrap();
        assert!(r.checks.iter().any(|c| c.claim == "x1 < x5" && c.pass));
        assert!(matches!(
            check_monotonicity(&GldSpec::new(6, 2, 2, 4).unwrap(), al(0.5)),
            Err(Error::OutOfScope(_))
        ));
    }

    #[test]
    fn cross_examples() {
        let r = check_cross_inequalities(&GldSpec::new(6, 4, 2, 4).unwrap(), al(0.3)).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].claim, "x6 < x1");
        assert!(r.checks.iter().all(|c| c.exploratory));
        assert_eq!(
            check_cross_inequalities(&GldSpec::new(7, 5, 2, 4).unwrap(), al(0.0))
                .unwrap()
                .checks
                .len(),
            1
        );
        assert_eq!(
            check_cross_inequalities(&GldSpec::new(8, 6, 3, 6).unwrap(), al(0.5))
                .unwrap()
                .checks
                .len(),
            1
        );
        assert!(check_cross_inequalities(&GldSpec::new(6, 3, 2, 4).unwrap(), al(0.3)).is_err());
    }

    #[test]
    fn centered_profile_is_palindromic() {
        let spec = GldSpec::new(4, 2, 2, 4).unwrap();
        assert!(check_monotonicity(&spec, al(0.3)).is_err());
        let r = check_monotonicity_oriented(&spec, al(0.3)).unwrap();
        assert!(r.passed());
        assert!(check_centered(&GldSpec::new(5, 2, 2, 4).unwrap(), al(0.3)).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(GldSpec::new(1, 1, 2, 4).is_err());
        assert!(GldSpec::new(4, 4, 2, 4).is_err());
        assert!(GldSpec::new(4, 2, 1, 4).is_err());
        assert!(GldSpec::new(4, 2, 2, 3).is_err());
        let s = GldSpec::new(5, 3, 2, 4).unwrap();
        assert_eq!(s.join_spec().parts(), &[1, 2, 2, 4, 2, 1]);
        assert_eq!(s.order(), s.join_spec().order());
        assert_eq!(s.mirrored().join_spec(), s.join_spec().reversed());
    }
}
