//! Scheme parameters and the result records shared by the analysis modules.

use serde::Serialize;

use crate::error::{Error, Result};

/// Repetition degree `d` and normalized population `alpha = N/M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchemeParams {
    d: u32,
    alpha: f64,
}

impl SchemeParams {
    pub fn new(d: u32, alpha: f64) -> Result<Self> {
        if d < 1 {
            return Err(Error::param("d", "repetition degree must be at least 1"));
        }
        if !(alpha > 1.0) || !alpha.is_finite() {
            return Err(Error::param("alpha", format!("must be a finite value > 1, got {alpha}")));
        }
        Ok(Self { d, alpha })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Scheme rate `R = 1/d`.
    pub fn rate(&self) -> f64 {
        1.0 / self.d as f64
    }

    /// Nominal rate of the equivalent LDPC ensemble, `R0 = 1 - 1/alpha`.
    pub fn nominal_rate(&self) -> f64 {
        1.0 - 1.0 / self.alpha
    }

    /// Mean check-node degree `d * alpha`.
    pub fn avg_check_degree(&self) -> f64 {
        self.d as f64 * self.alpha
    }

    pub fn load(&self, g: f64) -> Result<LoadPoint> {
        LoadPoint::from_g(g, self.alpha)
    }
}

/// An operating point, expressed both as offered traffic `g` (packets/slot)
/// and activation probability `epsilon = g / alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LoadPoint {
    pub g: f64,
    pub epsilon: f64,
}

impl LoadPoint {
    pub fn from_g(g: f64, alpha: f64) -> Result<Self> {
        if !(g >= 0.0) || !g.is_finite() {
            return Err(Error::param("g", format!("offered traffic must be finite and >= 0, got {g}")));
        }
        let epsilon = g / alpha;
        if epsilon > 1.0 {
            return Err(Error::param(
                "g",
                format!("g = {g} exceeds alpha = {alpha} (activation probability > 1)"),
            ));
        }
        Ok(Self { g, epsilon })
    }

    pub fn from_epsilon(epsilon: f64, alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::param("epsilon", format!("must lie in [0,1], got {epsilon}")));
        }
        Ok(Self {
            g: epsilon * alpha,
            epsilon,
        })
    }
}

/// Outcome of a density evolution run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeResult {
    pub converged: bool,
    /// Last SN-to-BN erasure probability; the maximum over positions for the
    /// coupled chain.
    pub final_p: f64,
    pub iterations: usize,
    /// Per-iteration `(q, p)` pairs, recorded only when requested. For the
    /// coupled chain these are the position-wise maxima.
    pub trace: Option<Vec<(f64, f64)>>,
}

/// Outcome of a threshold bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdResult {
    /// Threshold in offered traffic `G` (the lower end of the final bracket).
    pub threshold: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// Bracket width at termination.
    pub tolerance: f64,
    pub evaluations: usize,
}

impl ThresholdResult {
    /// The same threshold as an activation probability, `G / alpha`.
    pub fn epsilon(&self, alpha: f64) -> f64 {
        self.threshold / alpha
    }
}

/// Bisection of a monotone predicate on `[lo, hi]`: `pred(lo)` is assumed
/// true, `pred(hi)` must be false. Returns the final bracket.
pub(crate) fn bisect_predicate<F>(lo: f64, hi: f64, tol: f64, mut pred: F) -> Result<ThresholdResult>
where
    F: FnMut(f64) -> bool,
{
    if !(tol > 0.0) {
        return Err(Error::param("bisect_tol", format!("must be > 0, got {tol}")));
    }
    let mut evaluations = 1;
    if pred(hi) {
        return Err(Error::Bracket(format!(
            "predicate holds at the upper bracket {hi}; enlarge the search interval"
        )));
    }
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        evaluations += 1;
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(ThresholdResult {
        threshold: lo,
        bracket_lo: lo,
        bracket_hi: hi,
        tolerance: hi - lo,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_rates() {
        let p = SchemeParams::new(3, 100.0).unwrap();
        assert_eq!(p.rate() * p.d() as f64, 1.0);
        assert!((p.nominal_rate() - 0.99).abs() < 1e-15);
        assert_eq!(p.avg_check_degree(), 300.0);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(SchemeParams::new(0, 100.0).is_err());
        assert!(SchemeParams::new(3, 1.0).is_err());
        assert!(SchemeParams::new(3, f64::NAN).is_err());
    }

    #[test]
    fn load_point_roundtrip() {
        let lp = LoadPoint::from_g(0.9, 100.0).unwrap();
        assert!((lp.epsilon - 0.009).abs() < 1e-15);
        assert!(LoadPoint::from_g(101.0, 100.0).is_err());
        assert!(LoadPoint::from_epsilon(1.5, 100.0).is_err());
    }

    #[test]
    fn bisection_finds_step() {
        let r = bisect_predicate(0.0, 1.0, 1e-6, |x| x < 0.3).unwrap();
        assert!(r.bracket_lo <= 0.3 && 0.3 <= r.bracket_hi);
        assert!(r.tolerance <= 1e-6);
        assert!(bisect_predicate(0.0, 1.0, 1e-6, |_| true).is_err());
    }
}
