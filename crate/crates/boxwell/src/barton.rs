//! Closed-form and quadrature estimates of the wall shift, and the
//! quality factors comparing them with the exact solve.
//!
//! Both estimates capture the same mechanism: the shift of level n is set
//! by how much free-state probability leaks past the wall, which dies off
//! like e^{−k²}. The asymptotic form is the leading large-k term
//!
//!   ΔE⁽ⁿ⁾ ≈ (2k)^{2n+1} e^{−k²} / (√π n! 2ⁿ),
//!
//! and the integral form replaces the closed-form denominator with the
//! actual inverse-density integral ∫ du/ψₙ(u)² of the free level across
//! the wall region, which tracks the exact shift considerably further down
//! in k. The obliquity factor exact/asymptotic measures what the dropped
//! (1 + O(1/k²)) corrections are worth.

use crate::eigensolve::{shift, Confinement, Level};
use crate::error::{Error, Result};
use crate::numerics::quad::adaptive_simpson;
use crate::numerics::{
    erfi_integral, erfi_integral_log, hermite_polynomial, log_gamma, SeriesConfig,
};
use std::fmt;

const SQRT_PI: f64 = 1.7724538509055160;
/// ln √π.
const LN_SQRT_PI: f64 = 0.5723649429247001;
/// Factorial/2ⁿ scales switch to log arithmetic past here.
const DIRECT_N: u32 = 20;
/// n beyond which even log arithmetic is refused (the estimate has no
/// meaning that deep into the spectrum at supported k anyway).
const MAX_N: u32 = 150;

/// Which estimate produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BartonMethod {
    Asymptotic,
    Integral,
}

impl BartonMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BartonMethod::Asymptotic => "asymptotic",
            BartonMethod::Integral => "integral",
        }
    }
}

impl fmt::Display for BartonMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One shift estimate with its provenance. `a_cutoff` is present exactly
/// for the excited-state integral, which needs a lower limit clear of the
/// polynomial's nodes.
#[derive(Debug, Clone, Copy)]
pub struct BartonEstimate {
    /// Estimated shift in ħω, strictly positive.
    pub value: f64,
    pub method: BartonMethod,
    pub n: Level,
    pub k: Confinement,
    pub a_cutoff: Option<f64>,
}

/// Exact-to-asymptotic shift ratio for one level.
#[derive(Debug, Clone, Copy)]
pub struct ObliquityRecord {
    pub n: u32,
    pub k: f64,
    /// shift(n, k) / asymptotic estimate; inside (0, 2) over the
    /// supported range and → 1 as k grows.
    pub ratio: f64,
}

/// (2k)^{2n+1} e^{−k²} / (√π n! 2ⁿ) — the shared asymptotic kernel.
/// Direct products up to n = 20 and k² = 700, log-assembled beyond.
fn asym_value(n: u32, k: f64) -> Result<f64> {
    if n > MAX_N {
        return Err(Error::Overflow { what: "asymptotic estimate level (need n <= 150)", x: n as f64 });
    }
    let t = k * k;
    let value = if n <= DIRECT_N && t <= 700.0 {
        let mut fact = 1.0f64;
        for m in 2..=n {
            fact *= m as f64;
        }
        (2.0 * k).powi(2 * n as i32 + 1) * (-t).exp() / (SQRT_PI * fact * (n as f64).exp2())
    } else {
        let ln_fact = log_gamma(n as f64 + 1.0)?.log_abs;
        let ln_v = (2.0 * n as f64 + 1.0) * (2.0 * k).ln()
            - t
            - LN_SQRT_PI
            - ln_fact
            - n as f64 * std::f64::consts::LN_2;
        ln_v.exp()
    };
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::Overflow { what: "asymptotic estimate out of f64 range", x: k });
    }
    Ok(value)
}

/// Leading large-k estimate of the ground-state shift,
/// (2/√π)(2k)e^{−k²}·E₀ with E₀ = 1/2.
pub fn barton_ground_asym(k: Confinement) -> Result<BartonEstimate> {
    Ok(BartonEstimate {
        value: asym_value(0, k.half_width())?,
        method: BartonMethod::Asymptotic,
        n: Level::new(0)?,
        k,
        a_cutoff: None,
    })
}

/// Leading large-k estimate of an excited-state shift,
/// E₀⁽ⁿ⁾·[2/((2n+1)√π n! 2ⁿ)]·(2k)^{2n+1}·e^{−k²} with E₀⁽ⁿ⁾ = n + 1/2.
///
/// The energy prefactors cancel to the shared kernel, so at n = 0 this is
/// bitwise the ground estimate (the stated n ≥ 1 precondition is soft).
pub fn barton_excited_asym(n: Level, k: Confinement) -> Result<BartonEstimate> {
    Ok(BartonEstimate {
        value: asym_value(n.index(), k.half_width())?,
        method: BartonMethod::Asymptotic,
        n,
        k,
        a_cutoff: None,
    })
}

/// Largest zero of the physicists' polynomial H_n; None for n = 0.
///
/// Newton from above the oscillation region (all zeros lie inside
/// |x| < √(2n+1)), using H′_n = 2n·H_{n−1}; convergence is monotone from
/// that side.
pub fn hermite_largest_zero(n: u32) -> Option<f64> {
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(0.0);
    }
    let mut x = (2.0 * n as f64 + 1.0).sqrt();
    for _ in 0..200 {
        let h = hermite_polynomial(n, x);
        let dh = 2.0 * n as f64 * hermite_polynomial(n - 1, x);
        let step = h / dh;
        x -= step;
        if step.abs() <= 1e-15 * x.abs() {
            break;
        }
    }
    Some(x)
}

/// Default lower integration limit for the excited integral: midway
/// between the outermost node of H_n and the wall. Fails when the wall
/// sits at or inside the node (no node-free window exists).
pub fn default_cutoff(n: Level, k: Confinement) -> Result<f64> {
    if n.index() == 0 {
        return Err(Error::Domain { what: "cutoff applies to excited levels only", x: 0.0 });
    }
    let node = hermite_largest_zero(n.index()).expect("n >= 1 has a zero");
    let kw = k.half_width();
    if node >= kw {
        return Err(Error::Domain {
            what: "no node-free window: outermost polynomial node at/outside the wall",
            x: node,
        });
    }
    Ok(0.5 * (node + kw))
}

/// Inverse-density estimate of the ground shift, 1/(√π·∫₀ᵏ e^{u²} du).
/// Switches to log assembly when the normalization integral overflows.
pub fn barton_ground_integral(k: Confinement) -> Result<BartonEstimate> {
    let kw = k.half_width();
    let value = match erfi_integral(kw) {
        Ok(i) => 1.0 / (SQRT_PI * i),
        Err(Error::Overflow { .. }) => {
            let ln_v = -(LN_SQRT_PI + erfi_integral_log(kw)?);
            let v = ln_v.exp();
            if !(v > 0.0) {
                return Err(Error::Overflow { what: "ground integral estimate underflow", x: kw });
            }
            v
        }
        Err(e) => return Err(e),
    };
    Ok(BartonEstimate {
        value,
        method: BartonMethod::Integral,
        n: Level::new(0)?,
        k,
        a_cutoff: None,
    })
}

/// Inverse-density estimate of an excited shift,
/// [∫_a^k du/ψₙ(u)²]⁻¹ with ψₙ the normalized free level.
///
/// Substituting u = k − v bounds the integrand:
/// value = e^{−k²} / (√π 2ⁿ n! J) with
/// J = ∫₀^{k−a} e^{v(v−2k)} / H_n(k−v)² dv. The cutoff must clear the
/// outermost node of H_n strictly (the raw integrand diverges
/// non-integrably at every node) and sit inside the wall.
pub fn barton_excited_integral(n: Level, k: Confinement, a_cutoff: f64) -> Result<BartonEstimate> {
    let nn = n.index();
    if nn == 0 {
        return Err(Error::Domain { what: "excited integral level (need n >= 1)", x: 0.0 });
    }
    let kw = k.half_width();
    let node = hermite_largest_zero(nn).expect("n >= 1 has a zero");
    if !(a_cutoff > node) {
        return Err(Error::Domain {
            what: "integration cutoff at/inside the outermost polynomial node",
            x: a_cutoff,
        });
    }
    if !(a_cutoff < kw) {
        return Err(Error::Domain { what: "integration cutoff at/outside the wall", x: a_cutoff });
    }
    let j = adaptive_simpson(
        |v| {
            let h = hermite_polynomial(nn, kw - v);
            (v * (v - 2.0 * kw)).exp() / (h * h)
        },
        0.0,
        kw - a_cutoff,
        5e-13,
    )?;
    let t = kw * kw;
    let value = if nn <= DIRECT_N && t <= 700.0 {
        let mut fact = 1.0f64;
        for m in 2..=nn {
            fact *= m as f64;
        }
        (-t).exp() / (SQRT_PI * (nn as f64).exp2() * fact * j)
    } else {
        let ln_fact = log_gamma(nn as f64 + 1.0)?.log_abs;
        (-t - LN_SQRT_PI - nn as f64 * std::f64::consts::LN_2 - ln_fact - j.ln()).exp()
    };
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::Overflow { what: "excited integral estimate out of f64 range", x: kw });
    }
    Ok(BartonEstimate {
        value,
        method: BartonMethod::Integral,
        n,
        k,
        a_cutoff: Some(a_cutoff),
    })
}

/// Ratio of the exact shift to the asymptotic estimate for one level.
pub fn obliquity(n: Level, k: Confinement, cfg: &SeriesConfig) -> Result<ObliquityRecord> {
    let exact = shift(n, k, cfg)?;
    let est = asym_value(n.index(), k.half_width())?;
    Ok(ObliquityRecord { n: n.index(), k: k.half_width(), ratio: exact / est })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(v: f64) -> Confinement {
        Confinement::new(v).unwrap()
    }

    fn lv(n: u32) -> Level {
        Level::new(n).unwrap()
    }

    #[test]
    fn ground_asym_frozen_values() {
        // 40-digit references, truncated
        let cases = [
            (1.0, 0.4151074974205947),
            (3.0, 4.1775915584024356e-4),
            (4.0, 5.0792938687466233e-7),
            (5.0, 7.8354332655086677e-11),
            (6.0, 1.5703807435495589e-15),
            (7.0, 4.1411740706021486e-21),
            (10.0, 4.1976562313544169e-43),
        ];
        for (kk, want) in cases {
            let got = barton_ground_asym(k(kk)).unwrap();
            assert!(
                (got.value - want).abs() <= 1e-12 * want,
                "k={kk}: got {:e}, want {want:e}",
                got.value
            );
            assert_eq!(got.method, BartonMethod::Asymptotic);
            assert!(got.a_cutoff.is_none());
        }
    }

    #[test]
    fn excited_asym_frozen_values() {
        let cases = [
            (1u32, 3.0, 7.5196648051243841e-3),
            (2, 3.0, 6.7676983246119457e-2),
            (1, 5.0, 3.9177166327543338e-9),
            (2, 5.0, 9.7942915818858346e-8),
            (3, 5.0, 1.6323819303143058e-6),
            (1, 6.0, 1.1306741353556824e-13),
            (2, 6.0, 4.0704268872804567e-12),
            (3, 6.0, 9.769024529473096e-11),
        ];
        for (n, kk, want) in cases {
            let got = barton_excited_asym(lv(n), k(kk)).unwrap();
            assert!(
                (got.value - want).abs() <= 1e-12 * want,
                "n={n} k={kk}: got {:e}, want {want:e}",
                got.value
            );
        }
    }

    #[test]
    fn excited_formula_at_zero_is_the_ground_formula() {
        for kk in [1.0, 3.0, 6.5, 10.0] {
            let g = barton_ground_asym(k(kk)).unwrap();
            let e = barton_excited_asym(lv(0), k(kk)).unwrap();
            assert_eq!(g.value, e.value, "k={kk}: formulas must agree bitwise at n = 0");
        }
    }

    #[test]
    fn asym_log_route_joins_the_direct_route() {
        // consecutive-n ratio is (2k)²/(2(n+1)); check across the n = 20/21
        // switch from direct products to log assembly
        let kk = 6.0;
        let v20 = asym_value(20, kk).unwrap();
        let v21 = asym_value(21, kk).unwrap();
        let want = (2.0 * kk) * (2.0 * kk) / (2.0 * 21.0);
        let got = v21 / v20;
        assert!((got - want).abs() <= 1e-10 * want, "{got} vs {want}");
        assert!(matches!(asym_value(151, 3.0), Err(Error::Overflow { .. })));
    }

    #[test]
    fn asym_decays_in_k() {
        for n in [0u32, 1, 2] {
            let mut prev = f64::INFINITY;
            for kk in [2.0, 3.0, 4.0, 5.0, 6.0, 7.0] {
                let v = asym_value(n, kk).unwrap();
                assert!(v > 0.0 && v < prev, "n={n} k={kk}");
                prev = v;
            }
        }
    }

    #[test]
    fn largest_zeros_of_low_polynomials() {
        assert_eq!(hermite_largest_zero(0), None);
        assert_eq!(hermite_largest_zero(1), Some(0.0));
        let cases = [
            (2u32, std::f64::consts::FRAC_1_SQRT_2),
            (3, 1.224744871391589),
            (4, 1.6506801238857845),
            (5, 2.0201828704560856),
            (6, 2.3506049736744923),
        ];
        for (n, want) in cases {
            let got = hermite_largest_zero(n).unwrap();
            assert!((got - want).abs() <= 1e-13, "n={n}: got {got}, want {want}");
            // it is the LARGEST zero: the polynomial keeps one sign beyond
            let beyond = hermite_polynomial(n, got + 1e-6);
            assert!(beyond > 0.0);
        }
    }

    #[test]
    fn default_cutoff_midpoint_and_window_check() {
        assert_eq!(default_cutoff(lv(1), k(5.0)).unwrap(), 2.5);
        let a = default_cutoff(lv(3), k(6.0)).unwrap();
        assert!((a - (1.224744871391589 + 6.0) / 2.0).abs() <= 1e-13);
        // wall inside the outermost node: no window
        assert!(matches!(default_cutoff(lv(3), k(1.0)), Err(Error::Domain { .. })));
        assert!(matches!(default_cutoff(lv(0), k(5.0)), Err(Error::Domain { .. })));
    }

    #[test]
    fn ground_integral_frozen_values() {
        let cases = [(1.0, 0.385730632822531), (3.0, 3.90565566008739e-4)];
        for (kk, want) in cases {
            let got = barton_ground_integral(k(kk)).unwrap();
            assert!(
                (got.value - want).abs() <= 1e-9 * want,
                "k={kk}: got {:e}, want {want:e}",
                got.value
            );
            assert_eq!(got.method, BartonMethod::Integral);
            assert!(got.a_cutoff.is_none());
        }
    }

    #[test]
    fn excited_integral_frozen_values_and_cutoff_monotonicity() {
        let cases = [
            (1u32, 5.0, 3.0, 3.671586131718e-9),
            (1, 5.0, 2.0, 3.671583951949e-9),
            (2, 6.0, 4.0, 3.671166957214e-12),
            (3, 6.0, 2.2, 8.04742750221e-11),
        ];
        for (n, kk, a, want) in cases {
            let got = barton_excited_integral(lv(n), k(kk), a).unwrap();
            assert!(
                (got.value - want).abs() <= 1e-8 * want,
                "n={n} k={kk} a={a}: got {:e}, want {want:e}",
                got.value
            );
            assert_eq!(got.a_cutoff, Some(a));
        }
        // lowering the cutoff adds integrand mass, shrinking the estimate
        let lo = barton_excited_integral(lv(1), k(5.0), 2.0).unwrap().value;
        let hi = barton_excited_integral(lv(1), k(5.0), 3.0).unwrap().value;
        assert!(lo < hi);
        // cutoff restrictions
        assert!(matches!(
            barton_excited_integral(lv(2), k(5.0), 0.5),
            Err(Error::Domain { .. }) // at/inside the node 1/sqrt(2)
        ));
        assert!(matches!(
            barton_excited_integral(lv(1), k(5.0), 5.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            barton_excited_integral(lv(0), k(5.0), 2.0),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn integral_tracks_asymptotic_at_large_k() {
        let frozen = [
            (3.0, 0.934906059),
            (4.0, 0.966385246),
            (5.0, 0.979105167),
            (6.0, 0.9856953256),
            (8.0, 0.992060363),
        ];
        let mut prev = 0.0;
        for (kk, want) in frozen {
            let ratio = barton_ground_integral(k(kk)).unwrap().value
                / barton_ground_asym(k(kk)).unwrap().value;
            assert!((ratio - want).abs() <= 1e-8, "k={kk}: {ratio}");
            assert!(ratio > 0.9 && ratio < 1.1);
            assert!(ratio > prev, "ratio must rise toward 1");
            prev = ratio;
        }
    }

    #[test]
    fn obliquity_frozen_ratios() {
        let cfg = SeriesConfig::default();
        let r = obliquity(lv(0), k(6.0), &cfg).unwrap();
        assert!((r.ratio - 0.9856953256).abs() <= 1e-9, "{}", r.ratio);
        assert_eq!((r.n, r.k), (0, 6.0));
        // per-level spread at k = 3: far from the asymptotic regime
        let r1 = obliquity(lv(1), k(3.0), &cfg).unwrap();
        let r2 = obliquity(lv(2), k(3.0), &cfg).unwrap();
        assert!((r1.ratio - 0.8087497795).abs() <= 1e-9, "{}", r1.ratio);
        assert!((r2.ratio - 0.6076993608).abs() <= 1e-9, "{}", r2.ratio);
    }
}
