use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parameters not admissible: {0}")]
    NotAdmissible(String),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("step {step} exceeds the allowed maximum {max}")]
    StepTooLarge { step: f64, max: f64 },

    #[error("profile is not a critical point (residual {residual:e})")]
    NotCritical { residual: f64 },

    #[error("trace is not closed: {0}")]
    NotClosed(String),

    #[error("m = {m} is odd with n = 2m = {n}")]
    IneligibleParity { n: usize, m: usize },

    #[error("principal curvature is zero")]
    ZeroCurvature,

    #[error("index {index} out of range 0..={max}")]
    Index { index: usize, max: usize },

    #[error("quadrature failed to converge (error estimate {estimate:e})")]
    QuadratureFailure { estimate: f64 },

    #[error("frame drift {drift:e} exceeds tolerance")]
    FrameDrift { drift: f64 },

    #[error("root search failed: {0}")]
    NoConvergence(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Precondition and domain failures, as opposed to numerical or I/O failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::NotAdmissible(_)
                | Error::Degenerate(_)
                | Error::OutOfRange(_)
                | Error::StepTooLarge { .. }
                | Error::NotCritical { .. }
                | Error::NotClosed(_)
                | Error::IneligibleParity { .. }
                | Error::ZeroCurvature
                | Error::Index { .. }
        )
    }
}
