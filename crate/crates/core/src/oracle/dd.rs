//! Double-double arithmetic.
//!
//! A value is stored as an unevaluated sum `hi + lo` of two `f64` with
//! `|lo| <= ulp(hi)/2`, giving roughly 32 significant decimal digits. The
//! building blocks are the error-free transformations TwoSum and FMA-based
//! TwoProd. Only what the series and Airy oracles need is provided: the four
//! operations, `exp`, `ln`, `sin`/`cos`, and a complex type on top.

use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: DoubleDouble = DoubleDouble::new(std::f64::consts::PI, 1.2246467991473532e-16);
pub const HALF_PI: DoubleDouble = DoubleDouble::new(std::f64::consts::FRAC_PI_2, 6.123233995736766e-17);
pub const LN2: DoubleDouble = DoubleDouble::new(std::f64::consts::LN_2, 2.3190468138462996e-17);
pub const HALF_LN_2PI: DoubleDouble =
    DoubleDouble::new(0.9189385332046728, -3.8782941580672414e-17);
pub const LN_PI: DoubleDouble = DoubleDouble::new(1.1447298858494002, 1.0265951162707826e-17);

impl DoubleDouble {
    pub const ZERO: Self = Self::new(0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0);

    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    #[inline]
    pub const fn from_f64(x: f64) -> Self {
        Self::new(x, 0.0)
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Self {
        let (p, e) = two_prod(a, b);
        Self::new(p, e)
    }

    /// Exact sum of two doubles.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Self {
        let (s, e) = two_sum(a, b);
        Self::new(s, e)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    /// Multiplication by an exact power of two.
    #[inline]
    pub fn ldexp(self, k: i32) -> Self {
        let s = 2f64.powi(k);
        Self::new(self.hi * s, self.lo * s)
    }

    pub fn round(self) -> Self {
        let hi = self.hi.round();
        if hi == self.hi {
            // hi already integral; the fractional part sits in lo.
            let lo = self.lo.round();
            let (s, e) = quick_two_sum(hi, lo);
            Self::new(s, e)
        } else if (hi - self.hi).abs() == 0.5 && self.lo != 0.0 {
            // Tie in hi broken by the sign of lo.
            let hi = if (self.lo > 0.0) == (hi > self.hi) {
                hi
            } else if hi > self.hi {
                hi - 1.0
            } else {
                hi + 1.0
            };
            Self::new(hi, 0.0)
        } else {
            Self::new(hi, 0.0)
        }
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.8 {
            return Self::new(f64::INFINITY, 0.0);
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        if self.hi == 0.0 {
            return Self::ONE;
        }
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2 * k).ldexp(-10);

        // expm1(r) by Taylor; |r| <= 3.4e-4 so ten terms are plenty.
        let mut term = r;
        let mut sum = r;
        for i in 2..=10 {
            term = term * r / (i as f64);
            sum += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        // expm1(2r) = 2 expm1(r) + expm1(r)^2
        for _ in 0..10 {
            sum = sum.ldexp(1) + sum.sqr();
        }
        let e = sum + 1.0;
        // Split the scaling so that 2^k never overflows on its own.
        let k = k as i32;
        let half = k / 2;
        e.ldexp(half).ldexp(k - half)
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Self::new(f64::NAN, f64::NAN);
        }
        if self.hi == 1.0 && self.lo == 0.0 {
            return Self::ZERO;
        }
        let y = Self::from_f64(self.hi.ln());
        y + self * (-y).exp() - 1.0
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(self) -> (Self, Self) {
        if self.hi == 0.0 {
            return (Self::ZERO, Self::ONE);
        }
        let k = (self.hi / HALF_PI.hi).round();
        let r = self - HALF_PI * k;
        let (s, c) = sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::ZERO;
        }
        let x = self.hi.sqrt();
        // One Newton step from the double approximation.
        let x = Self::from_f64(x);
        x + (self - x.sqr()) / (x * 2.0)
    }
}

fn sin_cos_taylor(r: DoubleDouble) -> (DoubleDouble, DoubleDouble) {
    let r2 = r.sqr();
    let mut s_term = r;
    let mut s = r;
    let mut c_term = DoubleDouble::ONE;
    let mut c = DoubleDouble::ONE;
    for i in 1..=16 {
        let k = (2 * i) as f64;
        c_term = -(c_term * r2) / ((k - 1.0) * k);
        s_term = -(s_term * r2) / (k * (k + 1.0));
        c += c_term;
        s += s_term;
        if c_term.hi.abs() < 1e-35 && s_term.hi.abs() < 1e-35 {
            break;
        }
    }
    (s, c)
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.hi, -self.lo)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Self::new(s1, s2)
    }
}

impl Add<f64> for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, b);
        let (s1, s2) = quick_two_sum(s1, s2 + self.lo);
        Self::new(s1, s2)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Sub<f64> for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: f64) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (p, e) = quick_two_sum(p, e);
        Self::new(p, e)
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (p, e) = quick_two_sum(p, e + self.lo * b);
        Self::new(p, e)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Self::new(q1, q2) + q3
    }
}

impl Div<f64> for DoubleDouble {
    type Output = Self;
    fn div(self, b: f64) -> Self {
        self / Self::from_f64(b)
    }
}

impl AddAssign for DoubleDouble {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl AddAssign<f64> for DoubleDouble {
    fn add_assign(&mut self, b: f64) {
        *self = *self + b;
    }
}

impl SubAssign for DoubleDouble {
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for DoubleDouble {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DdComplex {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

impl DdComplex {
    pub const ZERO: Self = Self::new(DoubleDouble::ZERO, DoubleDouble::ZERO);
    pub const ONE: Self = Self::new(DoubleDouble::ONE, DoubleDouble::ZERO);

    pub const fn new(re: DoubleDouble, im: DoubleDouble) -> Self {
        Self { re, im }
    }

    pub fn real(re: DoubleDouble) -> Self {
        Self::new(re, DoubleDouble::ZERO)
    }

    pub fn from_c64(z: Complex64) -> Self {
        Self::new(z.re.into(), z.im.into())
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_sqr(self) -> DoubleDouble {
        self.re.sqr() + self.im.sqr()
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re.hi == 0.0 && self.im.hi == 0.0
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Argument in `(-pi, pi]`.
    pub fn arg(self) -> DoubleDouble {
        if self.im.hi == 0.0 && self.im.lo == 0.0 {
            return if self.re.hi < 0.0 {
                PI
            } else {
                DoubleDouble::ZERO
            };
        }
        let t0 = DoubleDouble::from_f64(self.im.hi.atan2(self.re.hi));
        let (s, c) = t0.sin_cos();
        // Newton step on  y cos t - x sin t = 0.
        t0 + (self.im * c - self.re * s) / (self.re * c + self.im * s)
    }

    /// Principal logarithm.
    pub fn ln(self) -> Self {
        Self::new(self.norm_sqr().ln().ldexp(-1), self.arg())
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self::new(m * c, m * s)
    }

    pub fn scale(self, k: DoubleDouble) -> Self {
        Self::new(self.re * k, self.im * k)
    }
}

impl From<DoubleDouble> for DdComplex {
    fn from(x: DoubleDouble) -> Self {
        Self::real(x)
    }
}

impl Neg for DdComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Add for DdComplex {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self::new(self.re + b.re, self.im + b.im)
    }
}

impl Add<DoubleDouble> for DdComplex {
    type Output = Self;
    fn add(self, b: DoubleDouble) -> Self {
        Self::new(self.re + b, self.im)
    }
}

impl Sub for DdComplex {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Self::new(self.re - b.re, self.im - b.im)
    }
}

impl Sub<DoubleDouble> for DdComplex {
    type Output = Self;
    fn sub(self, b: DoubleDouble) -> Self {
        Self::new(self.re - b, self.im)
    }
}

impl Mul for DdComplex {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        Self::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

impl Div for DdComplex {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let d = b.norm_sqr();
        let n = self * b.conj();
        Self::new(n.re / d, n.im / d)
    }
}

impl AddAssign for DdComplex {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl MulAssign for DdComplex {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

/// Compensated (Neumaier-style via TwoSum) accumulator for `f64` terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    err: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.sum, x);
        self.sum = s;
        self.err += e;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.err
    }

    pub fn as_dd(&self) -> DoubleDouble {
        DoubleDouble::from_sum(self.sum, self.err)
    }
}
