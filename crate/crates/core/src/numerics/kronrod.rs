//! 7-15 Gauss-Kronrod panel rule for complex-valued integrands.

use num_complex::Complex64;

/// Kronrod abscissae (positive half), 15-point rule.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Gauss weights for the embedded 7-point rule (odd-index Kronrod nodes).
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// Evaluate the G7/K15 pair on [a, b]; returns (kronrod value, error estimate).
/// Costs exactly 15 integrand evaluations. The error estimate follows the
/// QUADPACK rescaling of the raw Kronrod-Gauss difference.
pub(crate) fn gk15<F>(f: &F, a: f64, b: f64) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut fv = [Complex64::default(); 15];
    fv[7] = f(center);
    for j in 0..7 {
        let dx = half * XGK[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }

    let mut kronrod = fv[7] * WGK[7];
    let mut gauss = fv[7] * WG[3];
    for j in 0..7 {
        let sum = fv[j] + fv[14 - j];
        kronrod += sum * WGK[j];
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }
    kronrod *= half;
    gauss *= half;

    // resasc: panel integral of |f - mean|, the QUADPACK normalizer.
    let mean = kronrod / (b - a);
    let mut resasc = WGK[7] * (fv[7] - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).norm() + (fv[14 - j] - mean).norm());
    }
    resasc *= half.abs();

    let diff = (kronrod - gauss).norm();
    let mut err = diff;
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    (kronrod, err.max(diff * f64::EPSILON))
}
