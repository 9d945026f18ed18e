//! Gamma, log-gamma and reciprocal gamma for complex arguments.
//!
//! The working-precision path uses the Lanczos approximation (g = 7, nine
//! coefficients) for `Re z >= 1/2` and the reflection formula elsewhere. The
//! double-double path uses the Stirling series after an upward shift and is
//! only meant for oracle duty.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::dd::{DdComplex, DoubleDouble, HALF_LN_2PI, LN_PI, PI as DD_PI};

/// Arguments closer than this to a non-positive integer are treated as poles.
pub const POLE_SNAP: f64 = 1e-14;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// If `z` is (within [`POLE_SNAP`]) a non-positive integer, returns it.
pub fn nonpositive_integer(z: Complex64) -> Option<i64> {
    let k = z.re.round();
    if k <= 0.0 && (z - Complex64::new(k, 0.0)).norm() < POLE_SNAP {
        Some(k as i64)
    } else {
        None
    }
}

fn lanczos_ln_gamma(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `sin(pi z)` with the integer part removed before scaling by pi.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let k = z.re.round();
    let r = Complex64::new(z.re - k, z.im);
    let s = (PI * r).sin();
    if (k as i64).rem_euclid(2) == 0 {
        s
    } else {
        -s
    }
}

/// Log-gamma. The imaginary part is determined modulo `2 pi` only, which is
/// all the callers need since they exponentiate it.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        lanczos_ln_gamma(z)
    } else {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        Complex64::new(PI.ln(), 0.0) - sin_pi(z).ln() - lanczos_ln_gamma(1.0 - z)
    }
}

pub fn gamma(z: Complex64) -> Complex64 {
    if nonpositive_integer(z).is_some() {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    if z.re >= 0.5 {
        lanczos_ln_gamma(z).exp()
    } else {
        PI / (sin_pi(z) * lanczos_ln_gamma(1.0 - z).exp())
    }
}

/// Logarithm of `1/Gamma(z)`, or `None` at a pole of Gamma (where `1/Gamma`
/// vanishes).
pub fn ln_recip_gamma(z: Complex64) -> Option<Complex64> {
    if nonpositive_integer(z).is_some() {
        return None;
    }
    if z.re >= 0.5 {
        Some(-lanczos_ln_gamma(z))
    } else {
        // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi
        Some(sin_pi(z).ln() + lanczos_ln_gamma(1.0 - z) - PI.ln())
    }
}

/// `1/Gamma(z)`, an entire function: exactly zero at the poles of Gamma.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if nonpositive_integer(z).is_some() {
        return Complex64::new(0.0, 0.0);
    }
    if z.re >= 0.5 {
        (-lanczos_ln_gamma(z)).exp()
    } else {
        sin_pi(z) * lanczos_ln_gamma(1.0 - z).exp() / PI
    }
}

/// Real-argument `1/Gamma(x)`.
pub fn recip_gamma_real(x: f64) -> f64 {
    let k = x.round();
    if k <= 0.0 && (x - k).abs() < POLE_SNAP {
        return 0.0;
    }
    if x == k && (1.0..=30.0).contains(&x) {
        // Exact (x - 1)! for small positive integers.
        let fact: f64 = (1..k as i64).map(|i| i as f64).product();
        return 1.0 / fact;
    }
    if x >= 0.5 {
        (-lanczos_ln_gamma(Complex64::new(x, 0.0)).re).exp()
    } else {
        let r = x - k;
        let s = (PI * r).sin()
            * if (k as i64).rem_euclid(2) == 0 {
                1.0
            } else {
                -1.0
            };
        s * lanczos_ln_gamma(Complex64::new(1.0 - x, 0.0)).re.exp() / PI
    }
}

// Stirling coefficients B_{2k} / (2k (2k - 1)) as exact rationals.
const STIRLING: [(f64, f64); 14] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (77683.0, 5796.0),
    (-236364091.0, 1506960.0),
    (657931.0, 300.0),
    (-3392780147.0, 93960.0),
];

const STIRLING_SHIFT: f64 = 25.0;

/// Double-double log-gamma for `Re z >= 1/2` (imaginary part modulo `2 pi`).
pub fn ln_gamma_dd(z: DdComplex) -> DdComplex {
    let mut w = z;
    let mut prod = DdComplex::ONE;
    let mut shifted = false;
    while w.re.hi < STIRLING_SHIFT {
        prod *= w;
        w = w + DoubleDouble::ONE;
        shifted = true;
    }
    let inv = DdComplex::ONE / w;
    let inv2 = inv * inv;
    let mut series = DdComplex::ZERO;
    let mut pow = inv;
    for &(num, den) in STIRLING.iter() {
        let coef = DoubleDouble::from_f64(num) / den;
        series += pow.scale(coef);
        pow *= inv2;
    }
    let mut lg = (w - DoubleDouble::new(0.5, 0.0)) * w.ln() - w + HALF_LN_2PI + series;
    if shifted {
        lg = lg - prod.ln();
    }
    lg
}

/// `sin(pi z)` in double-double with exact integer-part removal.
pub fn sin_pi_dd(z: DdComplex) -> DdComplex {
    let k = z.re.round();
    let r = z.re - k;
    let odd = (k.hi as i64 + k.lo as i64).rem_euclid(2) == 1;
    let x = r * DD_PI;
    let y = z.im * DD_PI;
    let (s, c) = x.sin_cos();
    let ey = y.exp();
    let emy = (-y).exp();
    let cosh = (ey + emy).ldexp(-1);
    let sinh = (ey - emy).ldexp(-1);
    let v = DdComplex::new(s * cosh, c * sinh);
    if odd {
        -v
    } else {
        v
    }
}

/// Double-double logarithm of `1/Gamma(z)`, `None` at poles.
pub fn ln_recip_gamma_dd(z: DdComplex) -> Option<DdComplex> {
    if nonpositive_integer(z.to_c64()).is_some() {
        return None;
    }
    if z.re.hi >= 0.5 {
        Some(-ln_gamma_dd(z))
    } else {
        let one_minus = DdComplex::ONE - z;
        Some(sin_pi_dd(z).ln() + ln_gamma_dd(one_minus) - LN_PI)
    }
}
