//! Hermite functions of real (not necessarily integer) degree.
//!
//! H_ν(z) = 2^ν √π [ rΓ((1−ν)/2)·₁F₁(−ν/2; 1/2; z²)
//!                 − 2z·rΓ(−ν/2)·₁F₁((1−ν)/2; 3/2; z²) ].
//!
//! At integer ν one reciprocal gamma vanishes exactly and the surviving
//! series terminates, so the classical polynomials fall out of the same
//! code path. Each level of the confined oscillator has an eigenfunction
//! proportional to H_ν(z)·e^{−z²/2} with its own non-integer ν.

use super::gamma::reciprocal_gamma;
use super::kummer::kummer_1f1;
use super::SeriesConfig;
use crate::error::{Error, Result};

const SQRT_PI: f64 = 1.7724538509055160;

/// H_ν(z) with the default series configuration.
pub fn hermite_nu(nu: f64, z: f64) -> Result<f64> {
    hermite_nu_with(nu, z, &SeriesConfig::default())
}

/// H_ν(z) with explicit series control.
pub fn hermite_nu_with(nu: f64, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    if !nu.is_finite() || !z.is_finite() {
        return Err(Error::Domain { what: "hermite_nu argument", x: if nu.is_finite() { z } else { nu } });
    }
    let t = z * z;
    let c_even = reciprocal_gamma((1.0 - nu) / 2.0);
    let c_odd = reciprocal_gamma(-nu / 2.0);
    // Series are skipped when their prefactor is exactly zero (integer ν);
    // that is what makes the polynomial case exact, not an optimization.
    let even_part = if c_even == 0.0 { 0.0 } else { c_even * kummer_1f1(-nu / 2.0, 0.5, t, cfg)? };
    let odd_part = if c_odd == 0.0 { 0.0 } else { c_odd * kummer_1f1((1.0 - nu) / 2.0, 1.5, t, cfg)? };
    Ok(nu.exp2() * SQRT_PI * (even_part - 2.0 * z * odd_part))
}

/// Leading-order large-argument form H_ν(z) ≈ (2z)^ν.
///
/// Only meaningful well outside the classical turning point; callers must
/// have |z| ≥ 3 or the approximation is not credible and a domain error is
/// returned. Negative z requires integer ν for (2z)^ν to be real.
pub fn hermite_asymptotic(nu: f64, z: f64) -> Result<f64> {
    if !nu.is_finite() || !z.is_finite() || z.abs() < 3.0 {
        return Err(Error::Domain { what: "hermite_asymptotic argument z (need |z| >= 3)", x: z });
    }
    if z > 0.0 {
        return Ok((nu * (2.0 * z).ln()).exp());
    }
    if nu == nu.floor() && nu.abs() < 1e9 {
        let sign = if (nu as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * (nu * (-2.0 * z).ln()).exp());
    }
    Err(Error::Domain { what: "hermite_asymptotic: negative z with non-integer degree", x: z })
}

/// Classical H_n(z) by the three-term recurrence
/// H_{n+1} = 2z·H_n − 2n·H_{n−1}. Reference implementation for tests and
/// for locating polynomial zeros.
pub fn hermite_polynomial(n: u32, z: f64) -> f64 {
    let mut h_prev = 1.0f64;
    if n == 0 {
        return h_prev;
    }
    let mut h = 2.0 * z;
    for m in 1..n {
        let next = 2.0 * z * h - 2.0 * (m as f64) * h_prev;
        h_prev = h;
        h = next;
    }
    h
}
