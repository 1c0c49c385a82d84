//! Two-term compensated arithmetic for cancellation-prone accumulations.
//!
//! A value is carried as an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)`,
//! giving roughly twice the working precision of `f64`. The series engines
//! switch to this representation when `SeriesConfig::high_precision` is set;
//! it is what makes the alternating-argument Kummer route usable, where the
//! final value can be smaller than the largest term by a factor of `exp(2t)`.
//!
//! The error-free transformations below are the classical ones (Knuth's
//! two-sum, FMA-based two-product); each derived operation keeps relative
//! error at the `eps^2` level, which is all the callers need.

/// Unevaluated sum of two doubles, `hi` carrying the leading digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompensatedReal {
    pub hi: f64,
    pub lo: f64,
}

/// `a + b` with exact rounding error: returns `(fl(a+b), err)`.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// `a + b` assuming `|a| >= |b|`; one branch cheaper than [`two_sum`].
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// `a * b` with exact rounding error via FMA: returns `(fl(a*b), err)`.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

// Named methods instead of operator traits: every call site should read
// as extended-precision arithmetic, not blend in with f64 expressions.
#[allow(clippy::should_implement_trait)]
impl CompensatedReal {
    pub const ZERO: CompensatedReal = CompensatedReal { hi: 0.0, lo: 0.0 };
    pub const ONE: CompensatedReal = CompensatedReal { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        CompensatedReal { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles as a two-term value (no information lost).
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        CompensatedReal { hi, lo }
    }

    /// Exact product of two doubles as a two-term value.
    #[inline]
    pub fn from_product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        CompensatedReal { hi, lo }
    }

    /// Collapse to the nearest double.
    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (h, l) = quick_two_sum(hi, lo);
        CompensatedReal { hi: h, lo: l }
    }

    #[inline]
    pub fn neg(self) -> Self {
        CompensatedReal { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) { self.neg() } else { self }
    }

    #[inline]
    pub fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        Self::renorm(s, e + self.lo + rhs.lo)
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> Self {
        let (s, e) = two_sum(self.hi, rhs);
        Self::renorm(s, e + self.lo)
    }

    #[inline]
    pub fn sub(self, rhs: Self) -> Self {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        Self::renorm(p, e + self.hi * rhs.lo + self.lo * rhs.hi)
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        Self::renorm(p, e + self.lo * rhs)
    }

    #[inline]
    pub fn div(self, rhs: Self) -> Self {
        // Long division: two quotient digits plus a first-order correction.
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        Self::renorm(q1, q2).add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, rhs: f64) -> Self {
        let q1 = self.hi / rhs;
        let (p, e) = two_prod(q1, rhs);
        let q2 = ((self.hi - p) - e + self.lo) / rhs;
        Self::renorm(q1, q2)
    }
}
