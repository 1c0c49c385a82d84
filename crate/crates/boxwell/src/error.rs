//! Error type shared by every numeric routine in the crate.

use std::fmt;

/// Failure modes of the special-function and spectral routines.
///
/// Every variant carries enough context to name the offending input in a
/// diagnostic without holding a reference into caller state.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Evaluation at a pole (gamma at a non-positive integer, Kummer series
    /// with `b` a non-positive integer).
    Pole { what: &'static str, x: f64 },
    /// An input outside the documented domain of the routine.
    Domain { what: &'static str, x: f64 },
    /// The result is not representable in `f64`.
    Overflow { what: &'static str, x: f64 },
    /// An iteration failed to meet its tolerance within its budget.
    NoConvergence { what: &'static str, iterations: usize },
    /// Root scanning exhausted its search window before finding the
    /// requested number of sign changes.
    BracketFailure { parity: &'static str, k: f64, missing_from: usize },
    /// A `SeriesConfig` or `FdConfig` field violates its invariant.
    InvalidConfig { what: &'static str },
    /// A failure during spectrum assembly, tagged with the level and box
    /// size being solved when it happened.
    AtLevel { n: u32, k: f64, source: Box<Error> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { what, x } => write!(f, "{what}: pole at {x:e}"),
            Error::Domain { what, x } => write!(f, "{what}: argument {x:e} outside domain"),
            Error::Overflow { what, x } => {
                write!(f, "{what}: result not representable at argument {x:e}")
            }
            Error::NoConvergence { what, iterations } => {
                write!(f, "{what}: no convergence after {iterations} iterations")
            }
            Error::BracketFailure { parity, k, missing_from } => write!(
                f,
                "root scan ({parity} branch, k = {k}): no bracket for root index {missing_from}"
            ),
            Error::InvalidConfig { what } => write!(f, "invalid configuration: {what}"),
            Error::AtLevel { n, k, source } => write!(f, "level n = {n} at k = {k}: {source}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::AtLevel { source, .. } => Some(source),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
