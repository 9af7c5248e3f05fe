//! Density evolution for block CSA, its threshold, and the load bound.
//!
//! With offered traffic `G` and repetition degree `d` the erasure
//! probabilities on the residual graph evolve as
//!
//! ```text
//! q_l = p_{l-1}^(d-1)
//! p_l = 1 - exp(-G d q_l)
//! ```
//!
//! starting from `p_0 = 1`. The SIC threshold is the largest `G` for which
//! `p_l -> 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{bisect_predicate, DeResult, LoadPoint, SchemeParams, ThresholdResult};

/// Upper end of every threshold bisection, in packets/slot.
pub const G_SEARCH_MAX: f64 = 1.2;

/// Stopping rules shared by all density evolution loops.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlockDeConfig {
    /// Success once the erasure probability drops to this value.
    pub target_p: f64,
    pub max_iters: usize,
    /// A step that lowers the erasure probability by less than this is a stall.
    pub stall_eps: f64,
    pub record_trace: bool,
}

impl Default for BlockDeConfig {
    fn default() -> Self {
        Self {
            target_p: 1e-8,
            max_iters: 100_000,
            stall_eps: 1e-12,
            record_trace: false,
        }
    }
}

impl BlockDeConfig {
    pub fn with_trace(mut self) -> Self {
        self.record_trace = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_p > 0.0 && self.target_p < 1.0) {
            return Err(Error::param("target_p", format!("must lie in (0,1), got {}", self.target_p)));
        }
        if self.max_iters < 1 {
            return Err(Error::param("max_iters", "must be at least 1"));
        }
        if !(self.stall_eps >= 0.0) {
            return Err(Error::param("stall_eps", "must be >= 0"));
        }
        Ok(())
    }
}

/// Edge-perspective slot degree polynomial `exp(-g d (1 - x))`.
pub fn rho_tilde(x: f64, g: f64, d: u32) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::param("x", format!("must lie in [0,1], got {x}")));
    }
    if !(g >= 0.0) {
        return Err(Error::param("g", format!("must be >= 0, got {g}")));
    }
    Ok((-g * d as f64 * (1.0 - x)).exp())
}

/// One block DE step: returns `(q_l, p_l)` from `p_{l-1}`.
#[inline]
pub fn block_step(p_prev: f64, g: f64, d: u32) -> (f64, f64) {
    let q = p_prev.powi(d as i32 - 1);
    let p = -(-g * d as f64 * q).exp_m1();
    (q, p)
}

pub fn de_block_run(params: &SchemeParams, load: LoadPoint, cfg: &BlockDeConfig) -> DeResult {
    run_block(params.d(), load.g, cfg)
}

pub(crate) fn run_block(d: u32, g: f64, cfg: &BlockDeConfig) -> DeResult {
    let mut trace = cfg.record_trace.then(Vec::new);
    let mut p = 1.0_f64;
    for it in 1..=cfg.max_iters {
        let (q, next) = block_step(p, g, d);
        if let Some(t) = trace.as_mut() {
            t.push((q, next));
        }
        let progress = p - next;
        p = next;
        if p <= cfg.target_p {
            return DeResult {
                converged: true,
                final_p: p,
                iterations: it,
                trace,
            };
        }
        if progress < cfg.stall_eps {
            return DeResult {
                converged: false,
                final_p: p,
                iterations: it,
                trace,
            };
        }
    }
    DeResult {
        converged: false,
        final_p: p,
        iterations: cfg.max_iters,
        trace,
    }
}

/// SIC threshold `G^IT_block` by bisection on DE convergence over
/// `[0, G_SEARCH_MAX]`.
pub fn block_threshold(d: u32, cfg: &BlockDeConfig, bisect_tol: f64) -> Result<ThresholdResult> {
    if d < 2 {
        return Err(Error::param("d", "block threshold requires d >= 2"));
    }
    cfg.validate()?;
    let cfg = BlockDeConfig {
        record_trace: false,
        ..*cfg
    };
    bisect_predicate(0.0, G_SEARCH_MAX, bisect_tol, |g| run_block(d, g, &cfg).converged)
}

/// Threshold from the fixed-point condition `q > (1 - exp(-q G d))^(d-1)`
/// for all `q` in `(0,1]`, evaluated on a dense grid.
///
/// For fixed `q` the right-hand side grows with `G`, so the condition at `q`
/// holds exactly for `G < G_q = -ln(1 - q^(1/(d-1))) / (q d)`. The threshold is
/// the minimum of `G_q` over the grid. The grid combines `points` uniformly
/// spaced values with `points` log-spaced values down to 1e-12, since for
/// `d = 2` the minimum sits at `q -> 0`.
pub fn block_threshold_grid(d: u32, points: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::param("d", "block threshold requires d >= 2"));
    }
    if points < 2 {
        return Err(Error::param("points", "grid needs at least 2 points"));
    }
    let g_at = |q: f64| {
        let root = q.powf(1.0 / (d as f64 - 1.0));
        -(-root).ln_1p() / (q * d as f64)
    };
    let linear = (1..=points).map(|k| k as f64 / points as f64);
    let (lmin, lmax) = (-12.0_f64, 0.0_f64);
    let logs = (0..points).map(|k| 10f64.powf(lmin + (lmax - lmin) * k as f64 / (points - 1) as f64));
    // q = 1 gives G_q = +inf, which min() ignores
    Ok(linear.chain(logs).map(g_at).fold(f64::INFINITY, f64::min))
}

/// Bisection threshold together with the grid threshold; fails when they
/// differ by more than `10 * bisect_tol`.
pub fn block_threshold_cross_checked(
    d: u32,
    cfg: &BlockDeConfig,
    bisect_tol: f64,
) -> Result<(ThresholdResult, f64)> {
    let bis = block_threshold(d, cfg, bisect_tol)?;
    let grid = block_threshold_grid(d, 20_000)?;
    if (bis.threshold - grid).abs() > 10.0 * bisect_tol {
        return Err(Error::Inconsistent(format!(
            "d = {d}: bisection threshold {} vs grid threshold {grid}",
            bis.threshold
        )));
    }
    Ok((bis, grid))
}

/// Largest load `G*` sustainable at rate `R`: the positive root of
/// `G = 1 - exp(-G/R)`, or 0 when `1/R <= 1`.
pub fn solve_load_bound(rate: f64) -> Result<f64> {
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(Error::param("rate", format!("must lie in (0,1], got {rate}")));
    }
    let inv = 1.0 / rate;
    if inv <= 1.0 {
        return Ok(0.0);
    }
    let h = |g: f64| g - 1.0 + (-g * inv).exp();
    let (mut lo, mut hi) = (1e-12_f64, 1.0_f64);
    debug_assert!(h(lo) < 0.0 && h(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if h(lo).abs() <= h(hi).abs() { lo } else { hi })
}

/// Normalized efficiency `G_conv / G*`.
pub fn efficiency(g_conv: f64, g_star: f64) -> Result<f64> {
    if !(g_star > 0.0) {
        return Err(Error::param("g_star", format!("must be > 0, got {g_star}")));
    }
    Ok(g_conv / g_star)
}
