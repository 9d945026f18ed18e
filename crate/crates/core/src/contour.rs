//! Parabolic contour `z(u) = gamma (1 + i u)^2`, the Laplace-inversion
//! integrand along it, and the error-balancing choice of the trapezoidal
//! parameters `(N, h, gamma)`.
//!
//! The parameters equalise the four error sources of the truncated trapezoidal
//! rule (upper-strip and lower-strip discretisation, truncation, roundoff).
//! With `ell = -ln(eps_machine)` and a strip half-width `c` with correction
//! factor `xi`, they are
//!
//! ```text
//! h     = (2 + xi c) ell / (pi N^2)
//! gamma = pi^2 N^2 / ((2 + xi c)^2 t ell)
//! ```
//!
//! so `gamma t` does not depend on `t`. The node count comes from the requested
//! accuracy `eps_target`; for `Re(mu) >= 2` it is minimised over `c`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::brent::brent_min;
use crate::error::{domain, Error, Result};
use crate::wright::{EvalPoint, WrightOrder};

/// Resolution of the strip half-width search.
pub const C_XTOL: f64 = 1e-4;

/// Largest `gamma t` for which `exp(gamma t)` stays finite.
const MAX_GAMMA_T: f64 = 700.0;

/// Working precision and target accuracy, with their negative logarithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceProfile {
    eps_machine: f64,
    eps_target: f64,
    ell: f64,
    ell_tol: f64,
}

impl ToleranceProfile {
    pub const DEFAULT_TARGET: f64 = 1e-15;

    pub fn new(eps_machine: f64, eps_target: f64) -> Result<Self> {
        if !(eps_machine > 0.0 && eps_machine <= eps_target && eps_target < 1.0) {
            return Err(domain(format!(
                "tolerances need 0 < eps_machine <= eps_target < 1, got {eps_machine} and {eps_target}"
            )));
        }
        Ok(Self {
            eps_machine,
            eps_target,
            ell: -eps_machine.ln(),
            ell_tol: -eps_target.ln(),
        })
    }

    /// Double precision with the given target accuracy.
    pub fn with_target(eps_target: f64) -> Result<Self> {
        Self::new(f64::EPSILON, eps_target)
    }

    pub fn eps_machine(&self) -> f64 {
        self.eps_machine
    }

    pub fn eps_target(&self) -> f64 {
        self.eps_target
    }

    /// `-ln(eps_machine)`
    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// `-ln(eps_target)`
    pub fn ell_tol(&self) -> f64 {
        self.ell_tol
    }
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self::new(f64::EPSILON, Self::DEFAULT_TARGET).expect("default tolerances are valid")
    }
}

/// Trapezoidal-rule configuration on the parabola.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourParams {
    /// Nodes on each side of the vertex (`2N + 1` in total).
    pub n_nodes: usize,
    /// Step `h` in the contour parameter `u`.
    pub step: f64,
    /// Parabola scale (vertex at `gamma` on the real axis), units of 1/time.
    pub gamma: f64,
    /// Upper strip half-width; reported as 1 for `Re(mu) < 2`.
    pub c: f64,
    /// Correction factor entering the balance `2 + xi c`.
    pub xi: f64,
}

impl ContourParams {
    /// Step and scale balanced for a given node count, strip and time.
    pub fn balanced(n_nodes: usize, xi: f64, c: f64, t: f64, ell: f64) -> Self {
        let n = n_nodes as f64;
        let w = 2.0 + xi * c;
        Self {
            n_nodes,
            step: w * ell / (PI * n * n),
            gamma: PI * PI * n * n / (w * w * t * ell),
            c,
            xi,
        }
    }

    /// Same strip and correction, rebalanced at another node count.
    pub fn with_nodes(&self, n_nodes: usize, t: f64, ell: f64) -> Self {
        Self::balanced(n_nodes, self.xi, self.c, t, ell)
    }

    /// Roundoff estimate `eps exp(gamma t)`.
    pub fn roundoff_estimate(&self, t: f64, eps_machine: f64) -> f64 {
        eps_machine * (self.gamma * t).exp()
    }
}

/// Point and derivative of the parabola at parameter `u`.
pub fn contour_point(u: f64, gamma: f64) -> (Complex64, Complex64) {
    debug_assert!(gamma > 0.0);
    let z = Complex64::new(gamma * (1.0 - u * u), 2.0 * gamma * u);
    let dz = Complex64::new(-2.0 * gamma * u, 2.0 * gamma);
    (z, dz)
}

/// `g(u) = exp(z t) z^(-mu) exp(-|x| z^(-lambda)) z'(u)` on the principal branch.
pub fn integrand(u: f64, order: WrightOrder, point: EvalPoint, gamma: f64) -> Result<Complex64> {
    if !(gamma > 0.0) {
        return Err(domain(format!(
            "contour scale must be positive, got {gamma}"
        )));
    }
    let gt = gamma * point.t();
    if gt > MAX_GAMMA_T {
        return Err(Error::Overflow(gt));
    }
    Ok(integrand_unchecked(u, order, point, gamma))
}

#[inline]
pub(crate) fn integrand_unchecked(
    u: f64,
    order: WrightOrder,
    point: EvalPoint,
    gamma: f64,
) -> Complex64 {
    let (z, dz) = contour_point(u, gamma);
    let ln_z = z.ln();
    let exponent = z * point.t() - order.mu() * ln_z;
    let kernel = if point.abs_x() == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        -point.abs_x() * (-order.lambda() * ln_z).exp()
    };
    (exponent + kernel).exp() * dz
}

/// Continuous node-count estimate `N(c)` for a strip half-width `c`.
///
/// `Re(mu) < 2` gives `sqrt(ell ell_tol)/pi * sqrt(1 + 1/c)`; the other two
/// branches carry the `w(c)` correction. Returns NaN outside the admissible
/// interval of the `Re(mu) = 2` branch.
pub fn node_count_estimate(c: f64, re_mu: f64, tol: &ToleranceProfile) -> f64 {
    let base = (tol.ell * tol.ell_tol).sqrt() / PI;
    base * (1.0 + correction(c, re_mu, tol) / c).sqrt()
}

/// `2 / xi` as a function of `c`.
fn correction(c: f64, re_mu: f64, tol: &ToleranceProfile) -> f64 {
    if re_mu < 2.0 {
        1.0
    } else if re_mu == 2.0 {
        let q = (tol.ell - tol.ell_tol) * (1.0 - c) * (1.0 - c);
        1.0 + (-q.ln()).ln() / tol.ell_tol
    } else {
        1.0 + (2.0 - re_mu) / tol.ell_tol * (1.0 - c).ln()
    }
}

/// Correction factor `xi(c)`.
pub fn xi_for(c: f64, re_mu: f64, tol: &ToleranceProfile) -> f64 {
    2.0 / correction(c, re_mu, tol)
}

/// Search interval for `c` on the `Re(mu) >= 2` branches.
pub fn strip_search_interval(re_mu: f64, tol: &ToleranceProfile) -> Result<(f64, f64)> {
    if re_mu == 2.0 {
        let gap = tol.ell - tol.ell_tol;
        if !(gap > 0.0) {
            return Err(Error::InfeasibleTolerance(format!(
                "Re(mu) = 2 needs ell > ell_tol, got {} <= {}",
                tol.ell, tol.ell_tol
            )));
        }
        Ok(((1.0 - 1.0 / gap.sqrt()).next_up(), 1.0))
    } else {
        Ok((0.0, 1.0))
    }
}

/// Chooses `(N, h, gamma, c, xi)` for a given `mu`, time and tolerances.
/// Only `Re(mu)` enters.
pub fn select_contour(mu: Complex64, t: f64, tol: &ToleranceProfile) -> Result<ContourParams> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(format!("time must be positive and finite, got {t}")));
    }
    let re_mu = mu.re;
    if !re_mu.is_finite() {
        return Err(domain(format!("mu must be finite, got {mu}")));
    }
    if re_mu < 2.0 {
        let n = ((2.0 * tol.ell * tol.ell_tol).sqrt() / PI).floor() as usize;
        let n = n.max(1);
        return Ok(ContourParams::balanced(n, 2.0, 1.0, t, tol.ell));
    }

    let (a, b) = strip_search_interval(re_mu, tol)?;
    let min = brent_min(|c| node_count_estimate(c, re_mu, tol), a, b, C_XTOL)?;
    let c = min.arg;
    let n = min.value.ceil();
    if !n.is_finite() || n < 1.0 {
        return Err(domain(format!(
            "node count minimisation failed for Re(mu) = {re_mu}"
        )));
    }
    let xi = xi_for(c, re_mu, tol);
    Ok(ContourParams::balanced(n as usize, xi, c, t, tol.ell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn contour_point_examples() {
        let (z, dz) = contour_point(0.0, 1.0);
        assert_eq!(z, Complex64::new(1.0, 0.0));
        assert_eq!(dz, Complex64::new(0.0, 2.0));

        let (z, dz) = contour_point(1.0, 2.0);
        assert_eq!(z, Complex64::new(0.0, 4.0));
        assert_eq!(dz, Complex64::new(-4.0, 4.0));

        let (zp, _) = contour_point(0.37, 1.5);
        let (zm, _) = contour_point(-0.37, 1.5);
        assert_eq!(zm, zp.conj());
    }

    #[test]
    fn contour_matches_definition() {
        for &u in &[-3.0, -0.4, 0.9, 2.2] {
            let g = 0.7;
            let (z, dz) = contour_point(u, g);
            let w = Complex64::new(1.0, u);
            assert!((z - g * w * w).norm() < 1e-14);
            assert!((dz - Complex64::new(0.0, 2.0 * g) * w).norm() < 1e-14);
        }
    }

    #[test]
    fn integrand_at_vertex() {
        let order = WrightOrder::real(-0.5, 1.0).unwrap();
        let p = EvalPoint::new(1.0, 0.0).unwrap();
        let g = integrand(0.0, order, p, 1.0).unwrap();
        assert_relative_eq!(g.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(g.im, 2.0 * std::f64::consts::E, max_relative = 1e-15);
    }

    #[test]
    fn integrand_antisymmetry_for_real_mu() {
        let order = WrightOrder::real(-0.3, 0.8).unwrap();
        let p = EvalPoint::new(1.3, 2.0).unwrap();
        let a = integrand(0.7, order, p, 2.0).unwrap();
        let b = integrand(-0.7, order, p, 2.0).unwrap();
        assert!((b + a.conj()).norm() < 1e-14 * a.norm());
    }

    #[test]
    fn integrand_overflow_detected() {
        let order = WrightOrder::real(-0.3, 0.8).unwrap();
        let p = EvalPoint::new(1000.0, 1.0).unwrap();
        assert!(matches!(
            integrand(0.1, order, p, 1.0),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn selector_subcritical_branch() {
        let tol = ToleranceProfile::default();
        let p = select_contour(Complex64::new(0.5, 0.0), 1.0, &tol).unwrap();
        assert_eq!(p.n_nodes, 15);
        assert_eq!(p.xi, 2.0);
        assert_eq!(p.c, 1.0);
        assert_relative_eq!(p.step, 4.0 * tol.ell() / (PI * 225.0), max_relative = 1e-12);
        assert_relative_eq!(
            p.gamma,
            PI * PI * 225.0 / (16.0 * tol.ell()),
            max_relative = 1e-12
        );
        let q = select_contour(Complex64::new(0.5, 5.0), 1.0, &tol).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn selector_supercritical_grows_nodes() {
        let tol = ToleranceProfile::default();
        let p = select_contour(Complex64::new(10.0, 0.0), 1.0, &tol).unwrap();
        assert!(p.n_nodes > 15);
        assert!(p.c < 1.0 && p.c > 0.0);
    }

    #[test]
    fn critical_branch_requires_gap() {
        let tol = ToleranceProfile::new(1e-10, 1e-10).unwrap();
        let r = select_contour(Complex64::new(2.0, 0.0), 1.0, &tol);
        assert!(matches!(r, Err(Error::InfeasibleTolerance(_))));
    }

    #[test]
    fn selector_rejects_bad_time() {
        let tol = ToleranceProfile::default();
        assert!(select_contour(Complex64::new(0.5, 0.0), 0.0, &tol).is_err());
        assert!(select_contour(Complex64::new(0.5, 0.0), -1.0, &tol).is_err());
    }

    #[test]
    fn tolerance_validation() {
        assert!(ToleranceProfile::new(1e-10, 1e-12).is_err());
        assert!(ToleranceProfile::new(0.0, 1e-12).is_err());
        assert!(ToleranceProfile::new(1e-16, 1.0).is_err());
        let t = ToleranceProfile::default();
        assert_relative_eq!(t.ell(), 36.043_653_389_117_15, max_relative = 1e-14);
        assert_relative_eq!(t.ell_tol(), 34.538_776_394_910_684, max_relative = 1e-14);
    }
}
