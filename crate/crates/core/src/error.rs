//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failure modes of evaluation, reduction, quadrature and operator routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma factor in a numerator sits on a pole.
    #[error("pole: {0}")]
    Pole(String),
    /// Parameters violate a structural constraint of the object.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// The series does not converge at the requested argument.
    #[error("divergent: {0}")]
    Divergence(String),
    /// The requested quantity is undefined in this parameter regime.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    /// No identity maps this object onto the requested form.
    #[error("unsupported reduction: {0}")]
    UnsupportedReduction(String),
    /// Input data carries no usable information.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    /// The argument lies outside the admissible sector.
    #[error("sector violation: {0}")]
    Sector(String),
    /// The argument lies outside the domain of validity.
    #[error("domain violation: {0}")]
    Domain(String),
    /// A contour does not satisfy its geometric requirements.
    #[error("contour: {0}")]
    Contour(String),
    /// A quadrature routine failed to reach the requested tolerance.
    #[error("quadrature: {0}")]
    Quadrature(String),
    /// A connection formula hits its logarithmic (integer parameter) case.
    #[error("logarithmic case: {0}")]
    LogCase(String),
    /// A precondition of a closed-form operator image fails.
    #[error("constraint: {0}")]
    Constraint(String),
    /// The kernel of a defining integral is not integrable.
    #[error("singular kernel: {0}")]
    Singularity(String),
    /// A finite-difference stencil did not reach its tolerance.
    #[error("stencil: {0}")]
    Stencil(String),
    /// A defining integral diverges for these parameters.
    #[error("convergence: {0}")]
    Convergence(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
