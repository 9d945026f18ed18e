//! Truncated power series of the Wright function,
//! `W(z) = sum_n z^n / (n! Gamma(lambda n + mu))`.
//!
//! Each term is formed in logarithmic form, `n ln z - ln n! + ln(1/Gamma)`, so
//! that the individual factors never overflow even when `1/Gamma` grows
//! factorially at large negative arguments. Two precisions are offered:
//!
//! * [`SeriesMode::Working`]: `f64` coefficients, compensated summation.
//! * [`SeriesMode::DoubleDouble`]: every coefficient and the accumulation in
//!   double-double. This is the oracle mode; it stays accurate as long as the
//!   largest term is below roughly `1e16` times the result.

use num_complex::Complex64;

use super::dd::{CompensatedSum, DdComplex, DoubleDouble, PI as DD_PI};
use super::gamma::{ln_recip_gamma, ln_recip_gamma_dd};
use crate::wright::WrightOrder;

/// Number of consecutive small terms required before stopping.
const SMALL_RUN: usize = 3;

/// Largest tolerated relative cancellation error for a converged result.
pub const RELATIVE_GUARD: f64 = 1e-12;

const WORKING_ROUNDOFF: f64 = f64::EPSILON / 2.0;
const DD_ROUNDOFF: f64 = 4.93e-32; // 2^-104

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeriesMode {
    Working,
    #[default]
    DoubleDouble,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    /// Magnitude of the last term added.
    pub tail_bound: f64,
    /// Largest term magnitude times the unit roundoff of the mode: the
    /// cancellation error of the sum.
    pub rounding_bound: f64,
    /// False when `max_terms` was reached with `tail_bound > abs_tol`, when a
    /// term left the floating-point range, or when `rounding_bound` exceeds
    /// both `abs_tol` and `RELATIVE_GUARD * |value|`.
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub abs_tol: f64,
    pub max_terms: usize,
    pub mode: SeriesMode,
}

impl SeriesResult {
    /// `tail_bound + rounding_bound`.
    pub fn error_bound(&self) -> f64 {
        self.tail_bound + self.rounding_bound
    }
}

fn finish(
    value: Complex64,
    terms_used: usize,
    tail: f64,
    max_term: f64,
    u: f64,
    tail_ok: bool,
    abs_tol: f64,
) -> SeriesResult {
    let rounding_bound = max_term * u;
    let accurate = rounding_bound <= abs_tol.max(RELATIVE_GUARD * value.norm());
    SeriesResult {
        value,
        terms_used,
        tail_bound: tail,
        rounding_bound,
        converged: tail_ok && accurate,
    }
}

fn overflowed(terms_used: usize) -> SeriesResult {
    SeriesResult {
        value: Complex64::new(f64::NAN, f64::NAN),
        terms_used,
        tail_bound: f64::INFINITY,
        rounding_bound: f64::INFINITY,
        converged: false,
    }
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-17,
            max_terms: 1000,
            mode: SeriesMode::DoubleDouble,
        }
    }
}

/// Index past which term magnitudes are monotonically decreasing, from the
/// asymptotic ratio `|z| |lambda|^|lambda| n^(|lambda| - 1)` (halved for margin).
fn growth_phase_end(lambda: f64, z_abs: f64) -> f64 {
    let a = lambda.abs();
    if z_abs == 0.0 {
        return 0.0;
    }
    let base = 2.0 * z_abs * if a > 0.0 { a.powf(a) } else { 1.0 };
    if base <= 1.0 {
        0.0
    } else {
        base.powf(1.0 / (1.0 - a))
    }
}

/// Sums the series at `z` for the given order.
pub fn wright_series(order: WrightOrder, z: Complex64, opts: SeriesOptions) -> SeriesResult {
    assert!(opts.abs_tol > 0.0, "abs_tol must be positive");
    assert!(opts.max_terms >= 1, "max_terms must be at least 1");
    if z == Complex64::new(0.0, 0.0) {
        let value = match opts.mode {
            SeriesMode::Working => ln_recip_gamma(order.mu()).map(|l| l.exp()),
            SeriesMode::DoubleDouble => {
                ln_recip_gamma_dd(DdComplex::from_c64(order.mu())).map(|l| l.exp().to_c64())
            }
        }
        .unwrap_or_default();
        return SeriesResult {
            value,
            terms_used: 1,
            tail_bound: 0.0,
            rounding_bound: 0.0,
            converged: true,
        };
    }
    match opts.mode {
        SeriesMode::Working => sum_working(order, z, opts),
        SeriesMode::DoubleDouble => sum_dd(order, z, opts),
    }
}

struct StopRule {
    abs_tol: f64,
    min_terms: f64,
    run: usize,
}

impl StopRule {
    fn new(order: WrightOrder, z: Complex64, abs_tol: f64) -> Self {
        Self {
            abs_tol,
            min_terms: growth_phase_end(order.lambda(), z.norm()),
            run: 0,
        }
    }

    fn done(&mut self, n: usize, magnitude: f64) -> bool {
        if magnitude < self.abs_tol {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= SMALL_RUN && (n as f64) >= self.min_terms
    }
}

fn sum_working(order: WrightOrder, z: Complex64, opts: SeriesOptions) -> SeriesResult {
    let lambda = order.lambda();
    let mu = order.mu();
    let real = mu.im == 0.0 && z.im == 0.0;
    let ln_z_abs = z.norm().ln();
    let arg_z = z.arg();
    let mut ln_fact = 0.0;
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    let mut stop = StopRule::new(order, z, opts.abs_tol);
    let mut last = 0.0;
    let mut max_term: f64 = 0.0;
    let mut finite = true;

    for n in 0..opts.max_terms {
        if n > 0 {
            ln_fact += (n as f64).ln();
        }
        let term = match ln_recip_gamma(Complex64::new(lambda * n as f64, 0.0) + mu) {
            None => Complex64::new(0.0, 0.0),
            Some(lrg) => {
                let ln_mag = n as f64 * ln_z_abs - ln_fact + lrg.re;
                let phase = n as f64 * arg_z + lrg.im;
                if ln_mag > 709.0 {
                    finite = false;
                    Complex64::new(f64::INFINITY, 0.0)
                } else {
                    Complex64::from_polar(ln_mag.exp(), phase)
                }
            }
        };
        let term = if real {
            // Phase is a multiple of pi on the real line; keep the sign only.
            Complex64::new(term.re, 0.0)
        } else {
            term
        };
        re.add(term.re);
        im.add(term.im);
        last = term.norm();
        max_term = max_term.max(last);
        if !finite {
            return overflowed(n + 1);
        }
        if stop.done(n, last) {
            let value = Complex64::new(re.value(), im.value());
            return finish(
                value,
                n + 1,
                last,
                max_term,
                WORKING_ROUNDOFF,
                true,
                opts.abs_tol,
            );
        }
    }
    let value = Complex64::new(re.value(), im.value());
    let tail_ok = last <= opts.abs_tol;
    finish(
        value,
        opts.max_terms,
        last,
        max_term,
        WORKING_ROUNDOFF,
        tail_ok,
        opts.abs_tol,
    )
}

fn sum_dd(order: WrightOrder, z: Complex64, opts: SeriesOptions) -> SeriesResult {
    let lambda = order.lambda();
    let mu = DdComplex::from_c64(order.mu());
    let real = order.mu().im == 0.0 && z.im == 0.0;
    let zdd = DdComplex::from_c64(z);
    let ln_z = if real {
        // ln z = ln|z| + i pi for z < 0; the phase is tracked through parity.
        DdComplex::real(DoubleDouble::from_f64(z.re.abs()).ln())
    } else {
        zdd.ln()
    };
    let negative_real = real && z.re < 0.0;

    let mut ln_fact = DoubleDouble::ZERO;
    let mut sum = DdComplex::ZERO;
    let mut stop = StopRule::new(order, z, opts.abs_tol);
    let mut last = 0.0;
    let mut max_term: f64 = 0.0;

    for n in 0..opts.max_terms {
        if n > 0 {
            ln_fact += DoubleDouble::from_f64(n as f64).ln();
        }
        let arg = mu + DoubleDouble::from_prod(lambda, n as f64);
        let term = match ln_recip_gamma_dd(arg) {
            None => DdComplex::ZERO,
            Some(lrg) => {
                let ln_term = ln_z.scale(DoubleDouble::from_f64(n as f64)) - ln_fact + lrg;
                if ln_term.re.hi > 709.0 {
                    return overflowed(n + 1);
                }
                if real {
                    // Im(ln 1/Gamma) is 0 or pi for real arguments.
                    let k = (lrg.im / DD_PI).round().to_f64() as i64;
                    let flips = k + if negative_real { n as i64 } else { 0 };
                    let mag = ln_term.re.exp();
                    DdComplex::real(if flips.rem_euclid(2) == 0 { mag } else { -mag })
                } else {
                    ln_term.exp()
                }
            }
        };
        sum += term;
        last = term.to_c64().norm();
        max_term = max_term.max(last);
        if stop.done(n, last) {
            return finish(
                sum.to_c64(),
                n + 1,
                last,
                max_term,
                DD_ROUNDOFF,
                true,
                opts.abs_tol,
            );
        }
    }
    let tail_ok = last <= opts.abs_tol;
    finish(
        sum.to_c64(),
        opts.max_terms,
        last,
        max_term,
        DD_ROUNDOFF,
        tail_ok,
        opts.abs_tol,
    )
}
