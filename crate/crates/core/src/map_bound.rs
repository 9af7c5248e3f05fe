//! Upper bound on the genie-aided MAP threshold of block CSA.
//!
//! Block CSA with `N = alpha M` users is the erasure decoding of a code with
//! `d`-regular variable nodes and Poisson check degrees of mean `d alpha`,
//! the activation probability `epsilon` playing the role of the erasure
//! probability. Its iterative extrinsic erasure probability is
//!
//! ```text
//! p_i = epsilon q_{i-1}^(d-1),   q_i = 1 - exp(-d alpha p_i),   p_e = q_inf^d
//! ```
//!
//! Since the MAP extrinsic curve lies below the iterative one and its area
//! equals the nominal rate `R0 = 1 - 1/alpha`, the value `eps_bar` solving
//! `int_{eps_bar}^1 p_e(e) de = R0` bounds the MAP threshold from above.

use rayon::prelude::*;
use serde::Serialize;

use crate::de_block::BlockDeConfig;
use crate::error::{Error, Result};
use crate::params::SchemeParams;
use crate::quad::adaptive_simpson;

/// Tolerance, in epsilon, used to locate the iterative threshold before
/// integrating.
pub const IT_LOCATE_TOL: f64 = 1e-8;

/// Sampled iterative extrinsic erasure curve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtrinsicCurve {
    pub params: SchemeParams,
    /// `(epsilon, p_e)` pairs with strictly increasing epsilon.
    pub grid: Vec<(f64, f64)>,
}

/// Config used for extrinsic curves: the fixed points need to be accurate
/// close to 1, so the stall test is tighter than for threshold searches.
pub fn extrinsic_config() -> BlockDeConfig {
    BlockDeConfig {
        stall_eps: 1e-13,
        ..BlockDeConfig::default()
    }
}

struct Fixed {
    q: f64,
    cleared: bool,
}

fn extrinsic_fixed_point(params: &SchemeParams, epsilon: f64, cfg: &BlockDeConfig) -> Fixed {
    let d = params.d() as i32;
    let dc = params.avg_check_degree();
    let mut q = 1.0_f64;
    for _ in 0..cfg.max_iters {
        let p = epsilon * q.powi(d - 1);
        let next = -(-dc * p).exp_m1();
        let progress = q - next;
        q = next;
        if q <= cfg.target_p {
            return Fixed { q, cleared: true };
        }
        if progress < cfg.stall_eps {
            break;
        }
    }
    Fixed { q, cleared: false }
}

/// Iterative extrinsic erasure probability `p_e^IT(epsilon) = q_inf^d`.
pub fn extrinsic_p(params: &SchemeParams, epsilon: f64, cfg: &BlockDeConfig) -> Result<f64> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::param("epsilon", format!("must lie in [0,1], got {epsilon}")));
    }
    let fp = extrinsic_fixed_point(params, epsilon, cfg);
    Ok(if fp.cleared { 0.0 } else { fp.q.powi(params.d() as i32) })
}

/// Evaluates the extrinsic curve at the given activation probabilities.
pub fn extrinsic_curve(params: &SchemeParams, epsilons: &[f64], cfg: &BlockDeConfig) -> Result<ExtrinsicCurve> {
    if epsilons.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::param("epsilons", "grid must be strictly increasing"));
    }
    let grid = epsilons
        .par_iter()
        .map(|&e| extrinsic_p(params, e, cfg).map(|p| (e, p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtrinsicCurve { params: *params, grid })
}

/// Iterative threshold in epsilon, as a bracket `(lo, hi)`: the extrinsic
/// recursion clears at `lo` and does not at `hi`.
pub fn extrinsic_it_threshold(params: &SchemeParams, cfg: &BlockDeConfig) -> Result<(f64, f64)> {
    let clears = |e: f64| extrinsic_fixed_point(params, e, cfg).cleared;
    if clears(1.0) {
        return Err(Error::Bracket("extrinsic recursion clears at epsilon = 1".into()));
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > IT_LOCATE_TOL {
        let mid = 0.5 * (lo + hi);
        if clears(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Area function `I(x) = int_x^1 p_e(e) de` with `p_e` taken as exactly zero
/// below `it_start`.
fn area_above(params: &SchemeParams, x: f64, it_start: f64, cfg: &BlockDeConfig, quad_tol: f64) -> Result<f64> {
    let from = x.max(it_start);
    let q = adaptive_simpson(
        |e| extrinsic_p(params, e, cfg).unwrap_or(f64::NAN),
        from,
        1.0,
        quad_tol,
    )?;
    if !q.value.is_finite() {
        return Err(Error::Inconsistent("non-finite extrinsic area".into()));
    }
    Ok(q.value)
}

/// Area-theorem bound `eps_bar` on the MAP threshold in activation
/// probability.
pub fn map_epsilon_bound(params: &SchemeParams, cfg: &BlockDeConfig, quad_tol: f64) -> Result<f64> {
    cfg.validate()?;
    if params.d() < 2 {
        return Err(Error::param("d", "MAP bound requires d >= 2"));
    }
    let r0 = params.nominal_rate();
    let (_, it_hi) = extrinsic_it_threshold(params, cfg)?;
    let total = area_above(params, 0.0, it_hi, cfg, quad_tol)?;
    if total < r0 - quad_tol {
        return Err(Error::Bracket(format!(
            "area under the extrinsic curve {total} is below the nominal rate {r0}"
        )));
    }
    // The MAP threshold is never below the iterative one. A total area equal
    // to R0 within quadrature error (d = 2) puts the bound at eps_IT.
    if total <= r0 {
        return Ok(it_hi);
    }
    // I is flat on [0, eps_IT] and strictly decreasing above it
    let (mut lo, mut hi) = (it_hi, 1.0);
    while hi - lo > 0.1 * quad_tol {
        let mid = 0.5 * (lo + hi);
        if area_above(params, mid, it_hi, cfg, quad_tol)? >= r0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `alpha * eps_bar`, the MAP bound in offered traffic.
pub fn map_load_bound(params: &SchemeParams, cfg: &BlockDeConfig, quad_tol: f64) -> Result<f64> {
    Ok(params.alpha() * map_epsilon_bound(params, cfg, quad_tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> SchemeParams {
        SchemeParams::new(3, 100.0).unwrap()
    }

    #[test]
    fn extrinsic_endpoints() {
        let cfg = extrinsic_config();
        assert_eq!(extrinsic_p(&p3(), 0.0, &cfg).unwrap(), 0.0);
        let top = extrinsic_p(&p3(), 1.0, &cfg).unwrap();
        assert!((top - 1.0).abs() < 1e-10);
        assert!(extrinsic_p(&p3(), 1.1, &cfg).is_err());
    }

    #[test]
    fn extrinsic_zero_below_block_threshold() {
        let cfg = extrinsic_config();
        // 0.8184 / 100 rounded down
        assert!(extrinsic_p(&p3(), 0.00818, &cfg).unwrap() <= 1e-8);
        assert!(extrinsic_p(&p3(), 0.00819, &cfg).unwrap() > 0.1);
    }

    #[test]
    fn it_threshold_matches_block_de() {
        let (lo, hi) = extrinsic_it_threshold(&p3(), &extrinsic_config()).unwrap();
        assert!(hi - lo <= IT_LOCATE_TOL);
        assert!((100.0 * lo - 0.8184).abs() < 5e-4);
    }

    #[test]
    fn curve_is_monotone() {
        let eps: Vec<f64> = (1..200).map(|k| k as f64 * 0.005).collect();
        let c = extrinsic_curve(&p3(), &eps, &extrinsic_config()).unwrap();
        for w in c.grid.windows(2) {
            assert!(w[1].1 >= w[0].1);
        }
        assert!(c.grid.iter().all(|&(_, p)| (0.0..=1.0).contains(&p)));
        assert!(extrinsic_curve(&p3(), &[0.2, 0.1], &extrinsic_config()).is_err());
    }

    #[test]
    fn map_bound_d3() {
        let g = map_load_bound(&p3(), &extrinsic_config(), 1e-7).unwrap();
        assert!((g - 0.9179).abs() < 2e-3, "{g}");
    }

    #[test]
    fn map_bound_d2_equals_it() {
        let p = SchemeParams::new(2, 100.0).unwrap();
        let g = map_load_bound(&p, &extrinsic_config(), 1e-7).unwrap();
        assert!((g - 0.5).abs() < 2e-3, "{g}");
    }
}
