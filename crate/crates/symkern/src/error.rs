use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("parameter pole: {0}")]
    Pole(String),
    #[error("not supported: {0}")]
    Capability(String),
    #[error("parameter outside validity: {0}")]
    Validity(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("ill-conditioned fit: {0}")]
    Conditioning(String),
    #[error("unstable inversion: {0}")]
    Instability(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("singular drift: {0}")]
    SingularDrift(String),
    #[error("scheme failure: {0}")]
    Scheme(String),
    #[error("unknown name: {0}")]
    Unknown(String),
}

impl Error {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Overflow(_)
                | Error::Convergence(_)
                | Error::Conditioning(_)
                | Error::Instability(_)
                | Error::Scheme(_)
        )
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn validity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validity(msg.into()))
}
