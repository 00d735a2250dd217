//! Adaptive Simpson quadrature.

use alloc::vec::Vec;
use libm::fabs;

use crate::{Error, Result};

pub const DEFAULT_REL_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_EVALS: usize = 1_000_000;

/// Integrates `f` over `[a, b]` to the requested relative tolerance.
///
/// The interval is first split into 32 panels; each panel is refined by
/// bisection until the Richardson error estimate drops below its share of the
/// tolerance. Fails with [`Error::Domain`] when the evaluation budget runs out.
pub fn integrate<F>(f: F, a: f64, b: f64, rel_tol: f64, max_evals: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::Domain(alloc::format!("bad integration range [{a}, {b}]")));
    }

    const PANELS: usize = 32;
    let h = (b - a) / PANELS as f64;
    let evals = core::cell::Cell::new(0usize);
    let eval = |x: f64| {
        evals.set(evals.get() + 1);
        f(x)
    };

    // (lo, hi, f(lo), f(mid), f(hi), simpson estimate, depth)
    let mut stack: Vec<(f64, f64, f64, f64, f64, f64, u32)> = Vec::with_capacity(PANELS + 64);
    let mut coarse = 0.0;
    let mut f_lo = eval(a);
    for i in 0..PANELS {
        let lo = a + h * i as f64;
        let hi = if i + 1 == PANELS { b } else { a + h * (i + 1) as f64 };
        let mid = 0.5 * (lo + hi);
        let f_mid = eval(mid);
        let f_hi = eval(hi);
        let s = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
        coarse += s;
        stack.push((lo, hi, f_lo, f_mid, f_hi, s, 0));
        f_lo = f_hi;
    }

    let scale = fabs(coarse).max(f64::MIN_POSITIVE);
    let tol = rel_tol * scale;
    let total_width = b - a;
    let mut result = 0.0;
    while let Some((lo, hi, fl, fm, fh, whole, depth)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let lm = 0.5 * (lo + mid);
        let rm = 0.5 * (mid + hi);
        let flm = eval(lm);
        let frm = eval(rm);
        let left = (mid - lo) / 6.0 * (fl + 4.0 * flm + fm);
        let right = (hi - mid) / 6.0 * (fm + 4.0 * frm + fh);
        let delta = left + right - whole;
        let local_tol = tol * (hi - lo) / total_width;
        if fabs(delta) <= 15.0 * local_tol || depth >= 50 {
            result += left + right + delta / 15.0;
        } else {
            if evals.get() >= max_evals {
                return Err(Error::Domain(alloc::format!(
                    "quadrature did not converge within {max_evals} evaluations"
                )));
            }
            stack.push((lo, mid, fl, flm, fm, left, depth + 1));
            stack.push((mid, hi, fm, frm, fh, right, depth + 1));
        }
    }
    Ok(result)
}
