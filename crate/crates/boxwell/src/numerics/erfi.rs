//! The normalization integral ∫₀ᵏ e^{u²} du ("erfi-type" integral).
//!
//! Computed through the scaled form e^{k²}·D(k) with
//! D(k) = ∫₀ᵏ e^{v(v−2k)} dv (substitute u = k − v), whose integrand lies
//! in (0, 1] for 0 ≤ v ≤ k. That keeps the quadrature overflow-free for
//! every k the solver accepts; only the final e^{k²} scaling can overflow,
//! and the log variant avoids even that.

use super::quad::adaptive_simpson;
use crate::error::{Error, Result};

const QUAD_TOL: f64 = 5e-13;

/// D(k) = e^{−k²}·∫₀ᵏ e^{u²} du, evaluated without large numbers.
pub(crate) fn dawson_scaled(k: f64) -> Result<f64> {
    if !(k >= 0.0) {
        return Err(Error::Domain { what: "dawson_scaled argument", x: k });
    }
    adaptive_simpson(|v| (v * (v - 2.0 * k)).exp(), 0.0, k, QUAD_TOL)
}

/// ∫₀ᵏ e^{u²} du for 0 ≤ k ≤ 40.
///
/// Overflows f64 near k ≈ 26.6; the error carries the argument so callers
/// can switch to [`erfi_integral_log`].
pub fn erfi_integral(k: f64) -> Result<f64> {
    if !(k >= 0.0 && k <= 40.0) {
        return Err(Error::Domain { what: "erfi_integral argument (need 0 <= k <= 40)", x: k });
    }
    let value = (k * k).exp() * dawson_scaled(k)?;
    if !value.is_finite() {
        return Err(Error::Overflow { what: "erfi_integral", x: k });
    }
    Ok(value)
}

/// ln ∫₀ᵏ e^{u²} du = k² + ln D(k), finite for all 0 < k ≤ 40.
pub fn erfi_integral_log(k: f64) -> Result<f64> {
    if !(k > 0.0 && k <= 40.0) {
        return Err(Error::Domain { what: "erfi_integral_log argument (need 0 < k <= 40)", x: k });
    }
    Ok(k * k + dawson_scaled(k)?.ln())
}
