use thiserror::Error;

/// Errors produced by the numeric core.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// A parameter is outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// A frequency cutoff is too small for the requested evaluation.
    #[error("cutoff too small: {0}")]
    CutoffTooSmall(String),

    /// A quadrature did not reach the requested tolerance.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// A regulator-extrapolation sequence did not stabilize.
    #[error("extrapolation did not converge: {0}")]
    NonConvergence(String),

    /// Effective temperature is undefined when the upward rate vanishes.
    #[error("no effective temperature: upward transition rate is zero (inertial motion)")]
    InertialNoTemperature,
}

pub type Result<T> = std::result::Result<T, CoreError>;
