//! Error type shared by every evaluation in the crate.

use thiserror::Error;

/// Evaluation failure.
///
/// `Domain` means the arguments violate a precondition (the evaluation was
/// never attempted); `NoConvergence` means the arguments were admissible but
/// the requested tolerance could not be certified within the configured
/// budget *and* no meaningful partial value exists. When a partial value is
/// available, functions instead return an
/// [`EvalResult`](crate::EvalResult) with `converged == false`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The iteration budget was exhausted with no usable value.
    #[error("did not converge: {0}")]
    NoConvergence(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for a [`Error::Domain`] with a formatted message.
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Returns a domain error unless `cond` holds.
///
/// ```
/// use inchyp::error::ensure_domain;
/// assert!(ensure_domain(true, "never seen").is_ok());
/// assert!(ensure_domain(false, "x must be positive").is_err());
/// ```
pub fn ensure_domain(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.to_string()))
    }
}
