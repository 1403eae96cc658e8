use alloc::string::String;

/// Errors produced by the numerical library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two points that must be distinct coincide (bulk Green tensor singularity).
    #[error("coincident points: {0}")]
    Coincident(&'static str),
    /// The scene violates a structural invariant.
    #[error("invalid scene: {0}")]
    InvalidScene(String),
    /// The combination of geometry, regime and observable is not implemented.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Adaptive refinement ran out of levels before meeting the tolerance.
    #[error("numerical non-convergence (estimate {estimate:e}, error bound {error_bound:e})")]
    NonConvergence { estimate: f64, error_bound: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn scene(msg: impl Into<String>) -> Self {
        Error::InvalidScene(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    /// `true` for errors caused by the numerics rather than by the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonConvergence { .. })
    }
}

pub type Result<T> = core::result::Result<T, Error>;
