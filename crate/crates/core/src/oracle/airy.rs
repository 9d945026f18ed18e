//! Airy function `Ai` on `[-8, 8]` by its Maclaurin series.
//!
//! `Ai(x) = c1 f(x) - c2 g(x)` with
//! `f(x) = sum_k 3^k (1/3)_k x^(3k) / (3k)!` and
//! `g(x) = sum_k 3^k (2/3)_k x^(3k+1) / (3k+1)!`.
//! Both series and the final combination are carried in double-double, which
//! keeps the cancellation for positive `x` under control inside the range.

use super::dd::DoubleDouble;
use crate::error::{Error, Result};

/// `c1 = Ai(0) = 3^(-2/3) / Gamma(2/3)`.
pub const AI_ZERO: DoubleDouble = DoubleDouble::new(0.3550280538878172, 2.05233632436212e-17);
/// `c2 = -Ai'(0) = 3^(-1/3) / Gamma(1/3)`.
pub const AI_PRIME_ZERO: DoubleDouble =
    DoubleDouble::new(0.2588194037928068, -2.522243111610832e-17);

pub const AIRY_RANGE: f64 = 8.0;

const TERM_FLOOR: f64 = 1e-18;

pub fn airy_ai(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > AIRY_RANGE {
        return Err(Error::Range(format!(
            "Ai({x}) is outside the series validation range [-8, 8]"
        )));
    }
    let xd = DoubleDouble::from_f64(x);
    let x3 = xd * xd * xd;

    let mut f = DoubleDouble::ONE;
    let mut g = xd;
    let mut ft = DoubleDouble::ONE;
    let mut gt = xd;
    let mut k = 1.0f64;
    loop {
        // (3k)! / (3k-3)! = (3k-2)(3k-1)(3k); the Pochhammer factor 3^k (1/3)_k
        // contributes (3k-2), leaving (3k-1)(3k) in the denominator.
        ft = ft * x3 / ((3.0 * k - 1.0) * (3.0 * k));
        gt = gt * x3 / ((3.0 * k) * (3.0 * k + 1.0));
        f += ft;
        g += gt;
        if ft.hi.abs() < TERM_FLOOR && gt.hi.abs() < TERM_FLOOR {
            break;
        }
        k += 1.0;
    }
    Ok((AI_ZERO * f - AI_PRIME_ZERO * g).to_f64())
}
