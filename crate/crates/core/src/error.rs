use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("pole: {0}")]
    Pole(String),

    /// The requested branch does not carry a root of the requested kind.
    #[error("branch error: {0}")]
    Branch(String),

    #[error("no convergence: {0}")]
    Convergence(String),

    /// The ratio μ₂/μ₁ is undefined because μ₁ = 0.
    #[error("ratio undefined: first eigenvalue is zero")]
    RatioUndefined,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
