use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the evaluators.
///
/// Every variant maps to a stable string code (see [`Error::code`]) and to one
/// of two classes: domain errors (bad input, point outside a region of
/// convergence) and convergence errors (the input was fine but the requested
/// accuracy could not be certified within the work budget).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Gamma pole at z = {re} + {im}i")]
    GammaPole { re: f64, im: f64 },

    #[error("invalid parameters: {reason}")]
    InvalidParameters {
        reason: String,
        /// `(m, k)` with `u + 2ivk/π = -m`, when the failure is a lattice hit.
        lattice: Option<(u64, i64)>,
    },

    #[error("outside domain: {0}")]
    OutsideDomain(String),

    #[error("slow convergence after {terms} terms: {detail}")]
    SlowConvergence { terms: usize, detail: String },

    #[error("quadrature failed: estimate {estimate:e} after {nodes} nodes")]
    QuadratureFailure { estimate: f64, nodes: usize },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::GammaPole { .. } => "GammaPole",
            Error::InvalidParameters { .. } => "InvalidParameters",
            Error::OutsideDomain(_) => "OutsideDomain",
            Error::SlowConvergence { .. } => "SlowConvergence",
            Error::QuadratureFailure { .. } => "QuadratureFailure",
        }
    }

    /// True for input/domain problems, false for convergence failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::GammaPole { .. } | Error::InvalidParameters { .. } | Error::OutsideDomain(_)
        )
    }

    pub(crate) fn invalid(reason: impl Into<String>) -> Self {
        Error::InvalidParameters {
            reason: reason.into(),
            lattice: None,
        }
    }

    pub(crate) fn outside(detail: impl Into<String>) -> Self {
        Error::OutsideDomain(detail.into())
    }
}
