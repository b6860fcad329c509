//! Cauchy transforms and principal values on the half line.

use num_complex::Complex64;

use super::adaptive::{integrate_panels, integrate_tail};
use super::{QuadratureResult, Tolerances};
use crate::error::{Error, Result};

/// Relative distance from the cut below which the subtraction branch engages.
const NEAR_CUT: f64 = 0.05;

/// `int_0^inf f(omega) / (omega - z) domega` for z off the cut [0, inf).
///
/// Near the cut (small |Im z|, Re z > 0) the singular part is removed by
/// subtracting f(Re z)/(omega - z) on [0, 2 Re z] and adding its closed-form
/// log integral back, so the quadrature never sees the near-pole.
pub fn cauchy_integral<F>(f: F, z: Complex64, tol: &Tolerances) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    if z.im == 0.0 && z.re >= 0.0 {
        return Err(Error::Domain(format!(
            "cauchy_integral: z = {z} lies on the cut [0, inf)"
        )));
    }
    let x = z.re;
    if x > 0.0 && z.im.abs() < NEAR_CUT * (1.0 + x) {
        // Singular subtraction on [0, 2x].
        let fx = f(x);
        let smooth = move |w: f64| {
            let d = w - x;
            if d.abs() < 1e-9 * (1.0 + x) {
                // removable after subtraction: (f(w)-f(x))/(w-z) ~ f'(x)
                let h = 1e-6 * (1.0 + x);
                (f(x + h) - f(x - h)) / (2.0 * h)
            } else {
                (f(w) - fx) / (Complex64::new(w, 0.0) - z)
            }
        };
        let near = integrate_panels(smooth, &[(0.0, x), (x, 2.0 * x)], tol)?;
        // exact: f(x) * int_0^2x dw/(w-z) = f(x) * [Log(2x-z) - Log(-z)]
        let log_part = fx * ((Complex64::new(2.0 * x, 0.0) - z).ln() - (-z).ln());
        let tail = integrate_tail(
            |w| f(w) / (Complex64::new(w, 0.0) - z),
            2.0 * x,
            1.0 + x,
            tol,
        )?;
        Ok(QuadratureResult {
            value: near.value + log_part + tail.value,
            error_estimate: near.error_estimate + tail.error_estimate,
            evaluations: near.evaluations + tail.evaluations + 2,
        }
        .validated(tol.abs_tol)?)
    } else {
        let g = move |w: f64| f(w) / (Complex64::new(w, 0.0) - z);
        let mut r = integrate_semi_infinite_with_focus(g, x, tol)?;
        r = r.validated(tol.abs_tol)?;
        Ok(r)
    }
}

/// Semi-infinite integral with extra initial breakpoints around omega = x
/// (used when the integrand has structure near a known location).
fn integrate_semi_infinite_with_focus<F>(
    f: F,
    x: f64,
    tol: &Tolerances,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    let g = move |u: f64| {
        let om = u / (1.0 - u);
        f(om) / ((1.0 - u) * (1.0 - u))
    };
    let mut cuts = vec![0.0, 0.3, 0.5, 2.0 / 3.0, 0.8, 0.9, 0.966, 0.99, 1.0];
    if x > 0.0 {
        for om in [0.5 * x, x, 2.0 * x] {
            let u = om / (1.0 + om);
            if u > 1e-12 && u < 1.0 - 1e-12 {
                cuts.push(u);
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    }
    let panels: Vec<(f64, f64)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    integrate_panels(g, &panels, tol)
}

/// `P int_0^inf f(omega)/(omega - x) domega` for x > 0.
///
/// Computed as the symmetric-interval subtraction on [0, 2x] (which kills the
/// singular kernel exactly) plus the regular tail from 2x out.
pub fn principal_value<F>(f: F, x: f64, tol: &Tolerances) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    if x <= 0.0 {
        return Err(Error::Domain(format!(
            "principal_value: x = {x} must be positive"
        )));
    }
    let fx = f(x);
    let smooth = move |w: f64| {
        let d = w - x;
        if d.abs() < 1e-9 * (1.0 + x) {
            let h = 1e-6 * (1.0 + x);
            (f(x + h) - f(x - h)) / (2.0 * h)
        } else {
            (f(w) - fx) / d
        }
    };
    let near = integrate_panels(smooth, &[(0.0, x), (x, 2.0 * x)], tol)?;
    let tail = integrate_tail(|w| f(w) / (w - x), 2.0 * x, 1.0 + x, tol)?;
    QuadratureResult {
        value: near.value + tail.value,
        error_estimate: near.error_estimate + tail.error_estimate,
        evaluations: near.evaluations + tail.evaluations + 1,
    }
    .validated(tol.abs_tol)
}
