use thiserror::Error;

/// Errors produced by the library and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("infinite entangling time: coupling {coupling:e} times frequency difference {freq_diff:e} is zero")]
    InfiniteTime { coupling: f64, freq_diff: f64 },

    #[error("degenerate orbits: both radii equal {0} m")]
    DegenerateOrbit(f64),

    #[error("zero frequency difference")]
    ZeroFrequencyDifference,

    #[error("zero-norm state: the two spectral components cancel (omega_minus = 0, phi = pi)")]
    ZeroNormState,

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("quadrature did not converge: estimated error {achieved:e} exceeds tolerance {requested:e}")]
    NonConvergence { achieved: f64, requested: f64 },

    #[error("stored two-peak state has norm {norm}; finite-bandwidth storage is not norm preserving here")]
    UnnormalizedState { norm: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {value}")))
    }
}
