//! Two semi-infinite rods in perfect thermal contact at `x = 0`, with an
//! instantaneous heat pulse of strength `p0` at `x = rho > 0`.

use crate::error::{domain, Result};
use crate::wright::{mainardi_eval, LAMBDA_MARGIN};

/// `nu = alpha / 2` is clamped to this value at `alpha = 2`.
pub const NU_CLAMP: f64 = 1.0 - 2.0 * LAMBDA_MARGIN;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoRodConfig {
    p0: f64,
    rho: f64,
    a1: f64,
    a2: f64,
    k1: f64,
    k2: f64,
    alpha: f64,
    eta: f64,
}

impl TwoRodConfig {
    /// Rod 1 occupies `x > 0`, rod 2 `x < 0`.
    pub fn new(p0: f64, rho: f64, a1: f64, a2: f64, k1: f64, k2: f64, alpha: f64) -> Result<Self> {
        if !p0.is_finite() {
            return Err(domain(format!("p0 must be finite, got {p0}")));
        }
        for (name, v) in [("rho", rho), ("a1", a1), ("a2", a2), ("k1", k1), ("k2", k2)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{name} must be positive, got {v}")));
            }
        }
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(domain(format!("alpha must lie in (0, 2], got {alpha}")));
        }
        Ok(Self {
            p0,
            rho,
            a1,
            a2,
            k1,
            k2,
            alpha,
            eta: Self::eta_of(a1, a2, k1, k2),
        })
    }

    fn eta_of(a1: f64, a2: f64, k1: f64, k2: f64) -> f64 {
        k1 * a2.sqrt() / (k2 * a1.sqrt())
    }

    pub fn with_alpha(self, alpha: f64) -> Result<Self> {
        Self::new(self.p0, self.rho, self.a1, self.a2, self.k1, self.k2, alpha)
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }
    pub fn rho(&self) -> f64 {
        self.rho
    }
    pub fn a1(&self) -> f64 {
        self.a1
    }
    pub fn a2(&self) -> f64 {
        self.a2
    }
    pub fn k1(&self) -> f64 {
        self.k1
    }
    pub fn k2(&self) -> f64 {
        self.k2
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `k1 sqrt(a2) / (k2 sqrt(a1))`.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Order of the Mainardi kernel, `alpha / 2`, clamped below 1.
    pub fn nu(&self) -> f64 {
        let nu = 0.5 * self.alpha;
        if nu > NU_CLAMP {
            log::warn!("alpha = {} maps to nu = 1; clamped to {NU_CLAMP}", self.alpha);
            NU_CLAMP
        } else {
            nu
        }
    }
}

impl Default for TwoRodConfig {
    /// `p0 = 1, rho = 0.5, a1 = 3, a2 = 1, k1 = 2, k2 = 6, alpha = 1`.
    fn default() -> Self {
        Self::new(1.0, 0.5, 3.0, 1.0, 2.0, 6.0, 1.0).expect("valid constants")
    }
}

/// Temperature at `(x, t)`. The sign bit of `x` selects the rod, so `-0.0`
/// evaluates the rod-2 formula at the contact point.
pub fn tworod_solve(config: &TwoRodConfig, x: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(format!("t must be positive and finite, got {t}")));
    }
    if !x.is_finite() {
        return Err(domain(format!("x must be finite, got {x}")));
    }
    let nu = config.nu();
    let scale = t.powf(nu);
    let s1 = config.a1.sqrt() * scale;
    let eta = config.eta;
    if x.is_sign_positive() {
        let direct = mainardi_eval(nu, (x - config.rho).abs() / s1)?;
        let reflected = mainardi_eval(nu, (x + config.rho) / s1)?;
        Ok(config.p0 / (2.0 * s1) * (direct + (eta - 1.0) / (eta + 1.0) * reflected))
    } else {
        let s2 = config.a2.sqrt() * scale;
        let m = mainardi_eval(nu, x.abs() / s2 + config.rho / s1)?;
        Ok(eta * config.p0 / ((eta + 1.0) * s1) * m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_consistency() {
        let c = TwoRodConfig::default();
        let recomputed = c.k1() * c.a2().sqrt() / (c.k2() * c.a1().sqrt());
        assert!((c.eta() - recomputed).abs() <= 1e-15 * recomputed);
    }

    #[test]
    fn validation() {
        let c = TwoRodConfig::default();
        assert!(c.with_alpha(0.0).is_err());
        assert!(c.with_alpha(2.5).is_err());
        assert!(c.with_alpha(2.0).is_ok());
        assert!(TwoRodConfig::new(1.0, 0.0, 3.0, 1.0, 2.0, 6.0, 1.0).is_err());
        assert!(tworod_solve(&c, 0.0, 0.0).is_err());
    }

    #[test]
    fn alpha_two_is_clamped() {
        let c = TwoRodConfig::default().with_alpha(2.0).unwrap();
        assert_eq!(c.nu(), NU_CLAMP);
        assert!(tworod_solve(&c, 0.2, 1.0).is_ok());
    }

    #[test]
    fn continuity_at_contact() {
        let c = TwoRodConfig::default();
        let right = tworod_solve(&c, 0.0, 1.0).unwrap();
        let left = tworod_solve(&c, -0.0, 1.0).unwrap();
        assert!((right - left).abs() <= 1e-12 * right.abs());
    }
}
