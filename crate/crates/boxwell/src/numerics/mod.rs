//! Special-function foundation: gamma machinery, the Kummer confluent
//! hypergeometric series in plain and cancellation-safe split form, Hermite
//! functions of real degree, and the exponential-type quadrature behind the
//! ground-state integral estimate.

pub mod compensated;
pub mod erfi;
pub mod gamma;
pub mod hermite;
pub mod kummer;
pub(crate) mod quad;

pub use compensated::CompensatedReal;
pub use erfi::{erfi_integral, erfi_integral_log};
pub use gamma::{log_gamma, reciprocal_gamma, LogGamma};
pub use hermite::{hermite_asymptotic, hermite_nu, hermite_nu_with, hermite_polynomial};
pub use kummer::{kummer_1f1, kummer_1f1_split, kummer_1f1_via_transform, SplitParts};

use crate::error::{Error, Result};

/// Truncation and accumulation policy for every series evaluation.
///
/// The defaults resolve the full supported confinement range; commands and
/// tests tighten or loosen them explicitly when probing behavior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Stop once terms fall below `rel_tol` times the running sum.
    pub rel_tol: f64,
    /// Hard cap on summed terms; exceeding it is a non-convergence error.
    pub max_terms: usize,
    /// Number of consecutive below-tolerance terms required before stopping
    /// (guards against a single accidentally small term mid-series).
    pub consecutive_small: u32,
    /// Evaluate the term recurrence and the sum in two-term compensated
    /// arithmetic. Mandatory for alternating arguments, optional elsewhere.
    pub high_precision: bool,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { rel_tol: 1e-16, max_terms: 2000, consecutive_small: 3, high_precision: false }
    }
}

impl SeriesConfig {
    /// Default policy with compensated accumulation switched on.
    pub fn high_precision() -> Self {
        SeriesConfig { high_precision: true, ..Self::default() }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidConfig { what: "rel_tol must be positive" });
        }
        if self.max_terms < 16 {
            return Err(Error::InvalidConfig { what: "max_terms must be at least 16" });
        }
        if self.consecutive_small < 1 {
            return Err(Error::InvalidConfig { what: "consecutive_small must be at least 1" });
        }
        Ok(())
    }
}
