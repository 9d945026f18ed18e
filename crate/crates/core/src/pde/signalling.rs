//! Signalling problem on the half line: `u(0, t) = h(t)`, zero initial data,
//! `u(x, t) = int_0^t G_S(x, tau) h(t - tau) dtau`.

use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::quad::{integrate, QuadEstimate};
use crate::wright::{wright_eval, EvalPoint, WrightOrder};

fn check(nu: f64, d: f64, x: f64) -> Result<()> {
    if !(nu > 0.0 && nu <= 0.5) {
        return Err(domain(format!("nu must lie in (0, 1/2], got {nu}")));
    }
    if !(d > 0.0) || !d.is_finite() {
        return Err(domain(format!("diffusivity must be positive, got {d}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("x must be positive, got {x}")));
    }
    Ok(())
}

fn green_unchecked(order: WrightOrder, d: f64, x: f64, t: f64) -> Result<f64> {
    Ok(wright_eval(order, EvalPoint::new(t, x / d.sqrt())?)?.value.re)
}

/// `G_S(x, t; nu) = t^(-1) F_nu(x t^(-nu) / sqrt D)`, with `F_nu(z) = W_{-nu,0}(-z)`.
pub fn signalling_green(nu: f64, d: f64, x: f64, t: f64) -> Result<f64> {
    check(nu, d, x)?;
    green_unchecked(WrightOrder::real(-nu, 0.0)?, d, x, t)
}

/// `u(x, t)` for every `t` in `t_grid`, each by adaptive quadrature to
/// absolute tolerance `quad_tol`.
///
/// The kernel is extended by zero at `tau = 0`. An estimate whose
/// `converged` flag is false did not meet `quad_tol` within the panel cap.
pub fn signalling_solve<H>(
    h: H,
    nu: f64,
    d: f64,
    x: f64,
    t_grid: &[f64],
    quad_tol: f64,
) -> Result<Vec<QuadEstimate>>
where
    H: Fn(f64) -> f64 + Sync,
{
    check(nu, d, x)?;
    if !(quad_tol > 0.0) {
        return Err(domain(format!("quadrature tolerance must be positive, got {quad_tol}")));
    }
    if let Some(t) = t_grid.iter().find(|t| !(**t > 0.0) || !t.is_finite()) {
        return Err(domain(format!("times must be positive and finite, got {t}")));
    }
    let order = WrightOrder::real(-nu, 0.0)?;
    t_grid
        .par_iter()
        .map(|&t| {
            let mut failure = None;
            let q = integrate(
                |tau| {
                    if tau <= 0.0 {
                        return 0.0;
                    }
                    match green_unchecked(order, d, x, tau) {
                        Ok(g) => g * h(t - tau),
                        Err(e) => {
                            failure.get_or_insert(e);
                            f64::NAN
                        }
                    }
                },
                0.0,
                t,
                quad_tol,
            );
            match failure {
                Some(e) => Err(e),
                None => Ok(q),
            }
        })
        .collect()
}
