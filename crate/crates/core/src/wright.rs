//! Evaluation of `f(t; x) = t^(mu-1) W_{lambda,mu}(-|x| t^lambda)` by the
//! trapezoidal rule on the parabolic contour.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::contour::{integrand_unchecked, select_contour, ContourParams, ToleranceProfile};
use crate::error::{domain, Error, Result};
use crate::oracle::gamma::{recip_gamma, recip_gamma_real};

/// Orders closer than this to `lambda = -1` are rejected.
pub const LAMBDA_MARGIN: f64 = 1e-8;

/// Above this `|Im mu|` the accuracy of the selected contour is not assured.
pub const LARGE_IMAG_MU: f64 = 5.0;

/// Truncation estimates above this multiple of the target accuracy are
/// reported as a warning.
pub const TRUNCATION_WARN_FACTOR: f64 = 1e6;

/// `(lambda, mu)` with `lambda` in `(-1, 0]`.
///
/// `lambda = 0` is the exponential endpoint (`W_{0,mu}(z) = e^z / Gamma(mu)`);
/// the contour integral handles it unchanged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightOrder {
    lambda: f64,
    mu: Complex64,
}

impl WrightOrder {
    pub fn new(lambda: f64, mu: Complex64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= -1.0 + LAMBDA_MARGIN || lambda > 0.0 {
            return Err(domain(format!(
                "lambda must lie in (-1 + {LAMBDA_MARGIN:e}, 0], got {lambda}"
            )));
        }
        if !mu.re.is_finite() || !mu.im.is_finite() {
            return Err(domain(format!("mu must be finite, got {mu}")));
        }
        Ok(Self { lambda, mu })
    }

    pub fn real(lambda: f64, mu: f64) -> Result<Self> {
        Self::new(lambda, Complex64::new(mu, 0.0))
    }

    /// Order of the Mainardi function `M_nu`: `(-nu, 1 - nu)`.
    pub fn mainardi(nu: f64) -> Result<Self> {
        Self::real(-nu, 1.0 - nu)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    pub fn has_real_mu(&self) -> bool {
        self.mu.im == 0.0
    }
}

/// Time and space coordinates; only `|x|` enters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    t: f64,
    x: f64,
}

impl EvalPoint {
    pub fn new(t: f64, x: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(domain(format!("t must be positive and finite, got {t}")));
        }
        if !x.is_finite() {
            return Err(domain(format!("x must be finite, got {x}")));
        }
        Ok(Self { t, x })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn abs_x(&self) -> f64 {
        self.x.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AccuracyWarning {
    /// `|Im mu|` is large; the parameter selection ignores the `e^{2 pi Im mu}`
    /// growth of the error constant.
    LargeImaginaryMu(f64),
    /// The last retained quadrature term is far above the target accuracy,
    /// typically because `exp(-|x| z^(-lambda))` grows along the contour
    /// (`lambda < -1/2` with large `|x| t^lambda`).
    TruncationNotNegligible(f64),
}

impl std::fmt::Display for AccuracyWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::LargeImaginaryMu(im) => write!(f, "|Im mu| = {} is large", im.abs()),
            Self::TruncationNotNegligible(last) => {
                write!(f, "last quadrature term {last:e} is not negligible")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    /// The function value; the imaginary part is exactly zero for real `mu`.
    pub value: Complex64,
    pub contour: ContourParams,
    /// `eps_machine * exp(gamma t)`.
    pub est_roundoff: f64,
    pub warnings: Vec<AccuracyWarning>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Summation {
    /// Nodes `k = 0..=N` only, using `g(-u) = -conj(g(u))`; real `mu` only.
    Halved,
    /// All `2N + 1` nodes.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidSum {
    pub value: Complex64,
    /// `h/(2 pi) |g(N h)|`, the truncation estimate.
    pub last_term: f64,
    /// `h/(2 pi) sum |g(k h)|`.
    pub abs_sum: f64,
}

/// The finite trapezoidal rule with explicit parameters.
pub fn trapezoid_sum(
    order: WrightOrder,
    point: EvalPoint,
    params: &ContourParams,
    summation: Summation,
) -> Result<TrapezoidSum> {
    if summation == Summation::Halved && !order.has_real_mu() {
        return Err(domain("halved summation requires real mu"));
    }
    if !(params.gamma > 0.0 && params.step > 0.0) {
        return Err(domain("contour parameters must be positive"));
    }
    let gt = params.gamma * point.t();
    if gt > 700.0 {
        return Err(Error::Overflow(gt));
    }
    let n = params.n_nodes as i64;
    let h = params.step;
    let scale = h / (2.0 * PI);
    let g = |k: i64| integrand_unchecked(k as f64 * h, order, point, params.gamma);

    match summation {
        Summation::Halved => {
            let mut acc = 0.0;
            let mut abs_acc = 0.0;
            let mut last = 0.0;
            // Smallest terms first.
            for k in (1..=n).rev() {
                let gk = g(k);
                if k == n {
                    last = gk.norm();
                }
                acc += gk.im;
                abs_acc += gk.norm();
            }
            let g0 = g(0);
            let value = scale * (g0.im + 2.0 * acc);
            Ok(TrapezoidSum {
                value: Complex64::new(value, 0.0),
                last_term: scale * last,
                abs_sum: scale * (g0.norm() + 2.0 * abs_acc),
            })
        }
        Summation::Full => {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut abs_acc = 0.0;
            let mut last: f64 = 0.0;
            for k in (1..=n).rev() {
                let gp = g(k);
                let gm = g(-k);
                if k == n {
                    last = gp.norm().max(gm.norm());
                }
                acc += gp + gm;
                abs_acc += gp.norm() + gm.norm();
            }
            let g0 = g(0);
            acc += g0;
            abs_acc += g0.norm();
            // (h / 2 pi i) * S
            let value = Complex64::new(acc.im, -acc.re) * scale;
            Ok(TrapezoidSum {
                value,
                last_term: scale * last,
                abs_sum: scale * abs_acc,
            })
        }
    }
}

/// `t^(mu - 1) / Gamma(mu)`, the value at `x = 0`.
fn value_at_origin(order: WrightOrder, t: f64) -> Complex64 {
    if order.has_real_mu() {
        let mu = order.mu.re;
        Complex64::new(t.powf(mu - 1.0) * recip_gamma_real(mu), 0.0)
    } else {
        ((order.mu - 1.0) * t.ln()).exp() * recip_gamma(order.mu)
    }
}

/// Evaluates with the default tolerances.
pub fn wright_eval(order: WrightOrder, point: EvalPoint) -> Result<EvalResult> {
    wright_eval_with(order, point, &ToleranceProfile::default())
}

pub fn wright_eval_with(
    order: WrightOrder,
    point: EvalPoint,
    tol: &ToleranceProfile,
) -> Result<EvalResult> {
    let contour = select_contour(order.mu, point.t, tol)?;
    let est_roundoff = contour.roundoff_estimate(point.t, tol.eps_machine());
    let mut warnings = Vec::new();
    if order.mu.im.abs() > LARGE_IMAG_MU {
        log::warn!(
            "|Im mu| = {} exceeds {LARGE_IMAG_MU}; accuracy not assured",
            order.mu.im.abs()
        );
        warnings.push(AccuracyWarning::LargeImaginaryMu(order.mu.im));
    }

    if point.abs_x() == 0.0 {
        return Ok(EvalResult {
            value: value_at_origin(order, point.t),
            contour,
            est_roundoff,
            warnings,
        });
    }

    let summation = if order.has_real_mu() {
        Summation::Halved
    } else {
        Summation::Full
    };
    let sum = trapezoid_sum(order, point, &contour, summation)?;
    if sum.last_term > TRUNCATION_WARN_FACTOR * tol.eps_target() {
        warnings.push(AccuracyWarning::TruncationNotNegligible(sum.last_term));
    }
    Ok(EvalResult {
        value: sum.value,
        contour,
        est_roundoff,
        warnings,
    })
}

/// Mainardi function `M_nu(z) = W_{-nu, 1-nu}(-z)` for `nu` in `[0, 1)`, `z >= 0`.
pub fn mainardi_eval(nu: f64, z: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&nu) {
        return Err(domain(format!("nu must lie in [0, 1), got {nu}")));
    }
    if !(z >= 0.0) {
        return Err(domain(format!("z must be non-negative, got {z}")));
    }
    let order = WrightOrder::mainardi(nu)?;
    Ok(wright_eval(order, EvalPoint::new(1.0, z)?)?.value.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn order_validation() {
        assert!(WrightOrder::real(-0.5, 1.0).is_ok());
        assert!(WrightOrder::real(0.0, 1.0).is_ok());
        assert!(WrightOrder::real(0.1, 1.0).is_err());
        assert!(WrightOrder::real(-1.0, 1.0).is_err());
        assert!(WrightOrder::real(-1.0 + 1e-9, 1.0).is_err());
        assert!(WrightOrder::real(-1.0 + 1e-7, 1.0).is_ok());
        assert!(WrightOrder::new(-0.5, Complex64::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn point_validation() {
        assert!(EvalPoint::new(0.0, 1.0).is_err());
        assert!(EvalPoint::new(-1.0, 1.0).is_err());
        assert!(EvalPoint::new(1.0, f64::INFINITY).is_err());
        assert_eq!(EvalPoint::new(2.0, -3.0).unwrap().abs_x(), 3.0);
    }

    #[test]
    fn gaussian_case() {
        let r = wright_eval(
            WrightOrder::real(-0.5, 0.5).unwrap(),
            EvalPoint::new(1.0, 2.0).unwrap(),
        )
        .unwrap();
        let expected = (-1.0f64).exp() / PI.sqrt();
        assert_relative_eq!(r.value.re, expected, max_relative = 1e-13);
        assert_eq!(r.value.im, 0.0);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn origin_fast_path() {
        let r = wright_eval(
            WrightOrder::real(-0.5, 1.0).unwrap(),
            EvalPoint::new(1.0, 0.0).unwrap(),
        )
        .unwrap();
        assert_eq!(r.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn sign_of_x_is_irrelevant() {
        let o = WrightOrder::new(-0.4, Complex64::new(0.3, 0.7)).unwrap();
        let a = wright_eval(o, EvalPoint::new(1.7, 2.5).unwrap()).unwrap();
        let b = wright_eval(o, EvalPoint::new(1.7, -2.5).unwrap()).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn halved_requires_real_mu() {
        let o = WrightOrder::new(-0.4, Complex64::new(0.3, 0.7)).unwrap();
        let p = EvalPoint::new(1.0, 1.0).unwrap();
        let c = select_contour(o.mu(), 1.0, &ToleranceProfile::default()).unwrap();
        assert!(trapezoid_sum(o, p, &c, Summation::Halved).is_err());
    }

    #[test]
    fn large_imaginary_mu_warns() {
        let o = WrightOrder::new(-0.4, Complex64::new(0.3, 6.0)).unwrap();
        let r = wright_eval(o, EvalPoint::new(1.0, 1.0).unwrap()).unwrap();
        assert!(r
            .warnings
            .iter()
            .any(|w| matches!(w, AccuracyWarning::LargeImaginaryMu(_))));
    }

    #[test]
    fn growing_kernel_is_flagged() {
        let o = WrightOrder::real(-0.9, 0.5).unwrap();
        let r = wright_eval(o, EvalPoint::new(1.0, 5.0).unwrap()).unwrap();
        assert!(r
            .warnings
            .iter()
            .any(|w| matches!(w, AccuracyWarning::TruncationNotNegligible(_))));
    }

    #[test]
    fn mainardi_domain() {
        assert!(mainardi_eval(1.0, 1.0).is_err());
        assert!(mainardi_eval(-0.1, 1.0).is_err());
        assert!(mainardi_eval(0.5, -1.0).is_err());
        assert_relative_eq!(
            mainardi_eval(0.5, 0.0).unwrap(),
            1.0 / PI.sqrt(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            mainardi_eval(0.0, 1.0).unwrap(),
            (-1.0f64).exp(),
            max_relative = 1e-13
        );
    }
}
