//! Fourier-type integrals over the half line.

use num_complex::Complex64;

use super::adaptive::integrate_panels;
use super::{integrate_semi_infinite, QuadratureResult, Tolerances};
use crate::error::{Error, Result};

/// `int_0^inf f(omega) e^{-i omega t} domega`.
///
/// Panels are capped at width pi/(4|t|+1) so each one resolves the
/// oscillation; the range is extended block by block until an
/// integration-by-parts bound on the remaining tail, 2|f(W)|/|t|, drops
/// under the tolerance.
pub fn oscillatory_integral<F>(f: F, t: f64, tol: &Tolerances) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    if t == 0.0 {
        return integrate_semi_infinite(f, tol);
    }
    let cap = std::f64::consts::PI / (4.0 * t.abs() + 1.0);
    let block_width = 4.0f64;
    let n_panels = (block_width / cap).ceil() as usize;
    let block_tol = tol.scaled(0.125);

    let h = |w: f64| f(w) * Complex64::new(0.0, -w * t).exp();

    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0f64;
    let mut evals = 0usize;
    let mut tail_bound = f64::INFINITY;
    const MAX_BLOCKS: usize = 4096;

    for k in 0..MAX_BLOCKS {
        let a = k as f64 * block_width;
        let b = a + block_width;
        let panels: Vec<(f64, f64)> = (0..n_panels)
            .map(|i| {
                (
                    a + block_width * i as f64 / n_panels as f64,
                    a + block_width * (i + 1) as f64 / n_panels as f64,
                )
            })
            .collect();
        let r = integrate_panels(&h, &panels, &block_tol)?;
        acc += r.value;
        err += r.error_estimate;
        evals += r.evaluations;

        tail_bound = 2.0 * f(b).norm() / t.abs();
        evals += 1;
        let stop_at = tol.abs_tol.max(tol.rel_tol * acc.norm()) * 0.25;
        if k >= 1 && (tail_bound <= stop_at || r.value.norm() + tail_bound <= stop_at) {
            break;
        }
    }
    err += tail_bound.min(1.0);

    let out = QuadratureResult {
        value: acc,
        error_estimate: err,
        evaluations: evals,
    }
    .validated(tol.abs_tol)?;
    let threshold = tol.abs_tol.max(tol.rel_tol * acc.norm());
    if out.error_estimate > threshold * 100.0 && tail_bound > threshold * 50.0 {
        return Err(Error::QuadratureFailure {
            best: acc,
            achieved: out.error_estimate,
            requested: threshold,
        });
    }
    Ok(out)
}
