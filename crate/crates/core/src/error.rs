use num_complex::Complex64;
use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the domain of an operation (wrong sign, on a cut, at a pole, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature failed to reach the requested tolerance.
    /// Carries the best estimate and the error actually achieved.
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureFailure {
        best: Complex64,
        achieved: f64,
        requested: f64,
    },

    /// Root search diverged or ran out of iterations. The trail holds the iterates.
    #[error("root search failed after {} iterations, last residual {last_residual:.3e}", trail.len())]
    RootFailure {
        trail: Vec<Complex64>,
        last_residual: f64,
    },

    /// A root was found but on the wrong side of the real axis.
    #[error("root {root} lies on the wrong sheet (Im >= 0 expected negative)")]
    WrongSheet { root: Complex64 },

    /// The dispersion function vanished where it must not (λ=0 limit, real zero).
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),

    /// A state was handed to an expansion that requires the mirror analyticity class.
    #[error("analyticity error: {0}")]
    Analyticity(String),

    /// Time-direction violation of a semigroup expansion.
    #[error("direction error: {0}")]
    Direction(String),

    /// Observable kernel outside the supported separable + diagonal form.
    #[error("unsupported observable: {0}")]
    UnsupportedObservable(String),

    /// Sampled-grid format violation (non-uniform, asymmetric).
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
