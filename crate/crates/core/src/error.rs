use thiserror::Error;

/// Failure modes shared by every module.
///
/// Mathematical findings (odd link Euler characteristics, failed
/// divisibility) are never errors; they are reported as certificates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    /// Two independent computations of the same quantity disagreed.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    /// An unconditional congruence failed; always a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Process exit code used by the command line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Unsupported(_) => 2,
            Error::Consistency(_) | Error::TheoremViolation(_) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
