//! Adaptive Simpson quadrature on a finite interval.
//!
//! Shared by the scaled erfi integral and the overlap integrals behind the
//! tunneling estimates. All integrands there are smooth and positive with
//! mass concentrated near one endpoint, which bisection handles well.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 60;

fn simpson(h: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(m - a, fa, flm, fm);
    let right = simpson(b - m, fm, frm, fb);
    let refined = left + right;
    if (refined - whole).abs() <= 15.0 * eps || b - a < 1e-14 * (b.abs() + a.abs()) {
        return Ok(refined + (refined - whole) / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::NoConvergence { what: "adaptive quadrature", iterations: depth as usize });
    }
    let half_eps = 0.5 * eps;
    Ok(recurse(f, a, m, fa, flm, fm, left, half_eps, depth + 1)?
        + recurse(f, m, b, fm, frm, fb, right, half_eps, depth + 1)?)
}

/// ∫_a^b f with relative target `rel_tol` against a first whole-interval
/// estimate. Integrands must be finite on [a, b].
pub(crate) fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    if !(b >= a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain { what: "quadrature interval", x: b - a });
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fm = f(0.5 * (a + b));
    let fb = f(b);
    if !fa.is_finite() || !fm.is_finite() || !fb.is_finite() {
        return Err(Error::Domain { what: "quadrature integrand", x: fm });
    }
    let whole = simpson(b - a, fa, fm, fb);
    // Absolute budget from the coarse estimate, floored so that a zero
    // first pass (odd integrand) still refines.
    let eps = rel_tol * whole.abs().max(1e-120);
    recurse(&f, a, b, fa, fm, fb, whole, eps, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        // Simpson integrates cubics exactly
        let got = adaptive_simpson(|x| x * x * x - 2.0 * x, 0.0, 2.0, 1e-12).unwrap();
        assert!((got - 0.0).abs() < 1e-13);
        let got = adaptive_simpson(|x| x * x, 0.0, 3.0, 1e-12).unwrap();
        assert!((got - 9.0).abs() < 1e-12);
    }

    #[test]
    fn smooth_transcendental() {
        let got = adaptive_simpson(f64::sin, 0.0, std::f64::consts::PI, 1e-13).unwrap();
        assert!((got - 2.0).abs() < 1e-11, "{got}");
        let got = adaptive_simpson(f64::exp, 0.0, 1.0, 1e-13).unwrap();
        let want = std::f64::consts::E - 1.0;
        assert!((got - want).abs() < 1e-11 * want);
    }

    #[test]
    fn concentrated_mass() {
        // sharp exponential boundary layer like the confined integrands
        let got = adaptive_simpson(|x| (-50.0 * x).exp(), 0.0, 20.0, 1e-13).unwrap();
        let want = (1.0 - (-1000.0f64).exp()) / 50.0;
        assert!((got - want).abs() < 1e-12 * want, "{got} vs {want}");
    }

    #[test]
    fn rejects_bad_interval() {
        assert!(matches!(
            adaptive_simpson(|x| x, 1.0, 0.0, 1e-10),
            Err(Error::Domain { .. })
        ));
        assert_eq!(adaptive_simpson(|x| x, 2.0, 2.0, 1e-10).unwrap(), 0.0);
    }
}
