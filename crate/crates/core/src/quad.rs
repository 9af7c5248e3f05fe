//! Adaptive Simpson quadrature.

use crate::error::{Error, Result};

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub evaluations: usize,
    /// Panels that hit the depth limit before meeting their tolerance share.
    pub unresolved_panels: usize,
}

const MAX_DEPTH: u32 = 48;

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` by recursive
/// Simpson bisection with Richardson correction.
pub fn adaptive_simpson<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature>
where
    F: FnMut(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::param("quad_tol", format!("must be > 0, got {tol}")));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::param("interval", "integration limits must be finite"));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            evaluations: 0,
            unresolved_panels: 0,
        });
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    let mut q = Quadrature {
        value: 0.0,
        evaluations: 3,
        unresolved_panels: 0,
    };
    q.value = refine(&mut f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH, &mut q);
    Ok(q)
}

#[inline]
fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    stats: &mut Quadrature,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    stats.evaluations += 2;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    if depth == 0 {
        stats.unresolved_panels += 1;
        return left + right + delta / 15.0;
    }
    refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, stats)
        + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, stats)
}
