//! Adaptive panel refinement driver and the semi-infinite map.

use num_complex::Complex64;

use super::kronrod::gk15;
use super::{QuadratureResult, Tolerances};
use crate::error::{Error, Result};

/// Smallest panel width (relative to its location) we are willing to bisect.
const MIN_PANEL_REL: f64 = 1e-14;

/// Adaptively integrate `f` over the union of `panels`, refining the worst
/// panels by bisection until every panel meets its share of the tolerance.
///
/// Subdivision and summation order are fixed, so results are reproducible
/// bit-for-bit. Panels are processed LIFO; accepted contributions accumulate
/// in acceptance order.
pub fn integrate_panels<F>(f: F, panels: &[(f64, f64)], tol: &Tolerances) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    let total_len: f64 = panels.iter().map(|&(a, b)| (b - a).abs()).sum();
    if total_len == 0.0 {
        return Ok(QuadratureResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let mut evaluations = 0usize;
    let mut stack: Vec<(f64, f64, Complex64, f64)> = Vec::with_capacity(64);
    let mut rough = Complex64::new(0.0, 0.0);
    for &(a, b) in panels {
        let (v, e) = gk15(&f, a, b);
        evaluations += 15;
        rough += v;
        stack.push((a, b, v, e));
    }
    let threshold = tol.abs_tol.max(tol.rel_tol * rough.norm());

    let mut accepted = Complex64::new(0.0, 0.0);
    let mut accepted_err = 0.0f64;
    let mut splits = 0usize;

    while let Some((a, b, v, e)) = stack.pop() {
        let width = (b - a).abs();
        let local_budget = threshold * (width / total_len);
        let unsplittable = width <= MIN_PANEL_REL * (1.0 + a.abs().max(b.abs()));
        if e <= local_budget || unsplittable || splits >= tol.max_subdivisions {
            accepted += v;
            accepted_err += e;
            continue;
        }
        splits += 1;
        let mid = 0.5 * (a + b);
        let (v1, e1) = gk15(&f, a, mid);
        let (v2, e2) = gk15(&f, mid, b);
        evaluations += 30;
        stack.push((mid, b, v2, e2));
        stack.push((a, mid, v1, e1));
    }

    let result = QuadratureResult {
        value: accepted,
        error_estimate: accepted_err,
        evaluations,
    }
    .validated(threshold)?;

    if accepted_err > threshold.max(tol.abs_tol) * 4.0 && splits >= tol.max_subdivisions {
        return Err(Error::QuadratureFailure {
            best: accepted,
            achieved: accepted_err,
            requested: threshold,
        });
    }
    Ok(result)
}

/// Integral of `f` over [0, inf) via the rational map omega = u/(1-u).
///
/// Requires `f` to decay at least like omega^-2 so that the mapped integrand
/// stays bounded at u -> 1.
pub fn integrate_semi_infinite<F>(f: F, tol: &Tolerances) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    let g = move |u: f64| {
        let om = u / (1.0 - u);
        let jac = 1.0 / ((1.0 - u) * (1.0 - u));
        f(om) * jac
    };
    // Breakpoints put early panels around omega ~ 0.4 .. 100.
    let cuts = [0.0, 0.3, 0.5, 2.0 / 3.0, 0.8, 0.9, 0.966, 0.99, 1.0];
    let panels: Vec<(f64, f64)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    integrate_panels(g, &panels, tol)
}

/// Integral of `f` over [x0, inf), same map shifted.
pub(crate) fn integrate_tail<F>(f: F, x0: f64, scale: f64, tol: &Tolerances) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    let s = scale.max(1e-12);
    integrate_semi_infinite(move |t| f(x0 + s * t) * s, tol)
}
