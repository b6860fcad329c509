//! Deterministic quadrature and root-finding kernels.
//!
//! Everything here is pure: identical inputs give bit-identical outputs
//! (fixed subdivision and summation order, no randomness, no shared state).

mod adaptive;
mod cauchy;
mod cheb;
mod kronrod;
mod oscillatory;
mod root;

pub use adaptive::{integrate_panels, integrate_semi_infinite};
pub use cauchy::{cauchy_integral, principal_value};
pub use cheb::PiecewiseCheb;
pub use oscillatory::oscillatory_integral;
pub use root::{find_root_complex, find_root_complex_with_deriv};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Result of one quadrature call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// Conservative bound on the absolute error, always >= 0.
    pub error_estimate: f64,
    /// Number of integrand evaluations.
    pub evaluations: usize,
}

impl QuadratureResult {
    fn validated(self, requested: f64) -> Result<Self> {
        if !self.value.re.is_finite() || !self.value.im.is_finite() {
            return Err(Error::QuadratureFailure {
                best: self.value,
                achieved: f64::INFINITY,
                requested,
            });
        }
        Ok(self)
    }
}

/// Shared tolerance knobs for quadrature and root finding.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub root_tol: f64,
    pub max_iterations: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 4000,
            root_tol: 1e-12,
            max_iterations: 50,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let pos = self.rel_tol > 0.0
            && self.abs_tol > 0.0
            && self.root_tol > 0.0
            && self.max_subdivisions > 0
            && self.max_iterations > 0;
        if !pos {
            return Err(Error::Domain(
                "tolerances must be strictly positive".into(),
            ));
        }
        if self.rel_tol >= 1.0 {
            return Err(Error::Domain("rel_tol must be < 1".into()));
        }
        Ok(())
    }

    /// Scale both quadrature tolerances, keeping the rest.
    pub(crate) fn scaled(&self, factor: f64) -> Self {
        Tolerances {
            rel_tol: self.rel_tol * factor,
            abs_tol: self.abs_tol * factor,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests;
