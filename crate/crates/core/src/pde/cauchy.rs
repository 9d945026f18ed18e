//! Cauchy problem for the time-fractional diffusion-wave equation
//! `D_t^(2 nu) u = D u_xx` on the line, solved by periodic FFT convolution of
//! the data with the Green's function.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use super::grid::GridFunction;
use crate::error::{domain, Result};
use crate::wright::{wright_eval, EvalPoint, WrightOrder};

/// Kernel values at the grid edges above this fraction of the peak trigger a
/// [`SolverWarning::KernelNotDecayed`].
pub const DECAY_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolverWarning {
    /// The sampled kernel at the grid edge, relative to its maximum. Periodic
    /// wrap-around then pollutes the solution.
    KernelNotDecayed { edge_ratio: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CauchyProblem {
    nu: f64,
    diffusivity: f64,
    g: GridFunction,
    p: Option<GridFunction>,
}

impl CauchyProblem {
    /// `p` (the initial velocity) is required exactly when `nu > 1/2`.
    pub fn new(nu: f64, diffusivity: f64, g: GridFunction, p: Option<GridFunction>) -> Result<Self> {
        if !(nu > 0.0 && nu <= 1.0) {
            return Err(domain(format!("nu must lie in (0, 1], got {nu}")));
        }
        if !(diffusivity > 0.0) || !diffusivity.is_finite() {
            return Err(domain(format!("diffusivity must be positive, got {diffusivity}")));
        }
        match (&p, nu > 0.5) {
            (Some(p), true) => g.ensure_same_grid(p)?,
            (None, false) => {}
            (Some(_), false) => {
                return Err(domain(format!("initial velocity given for nu = {nu} <= 1/2")))
            }
            (None, true) => {
                return Err(domain(format!("initial velocity required for nu = {nu} > 1/2")))
            }
        }
        Ok(Self {
            nu,
            diffusivity,
            g,
            p,
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn diffusivity(&self) -> f64 {
        self.diffusivity
    }

    pub fn g(&self) -> &GridFunction {
        &self.g
    }

    pub fn p(&self) -> Option<&GridFunction> {
        self.p.as_ref()
    }
}

fn check_green_args(d: f64, x: f64, t: f64) -> Result<()> {
    if !(d > 0.0) || !d.is_finite() {
        return Err(domain(format!("diffusivity must be positive, got {d}")));
    }
    EvalPoint::new(t, x).map(|_| ())
}

fn scaled_kernel(lambda: f64, mu: f64, d: f64, x: f64, t: f64) -> Result<f64> {
    let sd = d.sqrt();
    let order = WrightOrder::real(lambda, mu)?;
    let r = wright_eval(order, EvalPoint::new(t, x.abs() / sd)?)?;
    Ok(r.value.re / (2.0 * sd))
}

/// `G_C(x, t; nu) = t^(-nu) M_nu(|x| t^(-nu) / sqrt D) / (2 sqrt D)`.
pub fn cauchy_green(nu: f64, d: f64, x: f64, t: f64) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(domain(format!("nu must lie in (0, 1), got {nu}")));
    }
    check_green_args(d, x, t)?;
    scaled_kernel(-nu, 1.0 - nu, d, x, t)
}

/// Time primitive of [`cauchy_green`]; its Laplace image carries one more
/// factor `1/s`, which raises `mu` by one.
pub fn cauchy_green_primitive(nu: f64, d: f64, x: f64, t: f64) -> Result<f64> {
    if !(nu > 0.5 && nu <= 1.0) {
        return Err(domain(format!("nu must lie in (1/2, 1], got {nu}")));
    }
    check_green_args(d, x, t)?;
    scaled_kernel(-nu, 2.0 - nu, d, x, t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CauchySolution {
    pub u: GridFunction,
    pub warnings: Vec<SolverWarning>,
}

/// Kernel sampled at offsets `(k - n/2) dx`, `k = 0..n`.
fn sample_kernel(
    kernel: impl Fn(f64) -> Result<f64> + Sync,
    n: usize,
    dx: f64,
) -> Result<Vec<f64>> {
    (0..n)
        .into_par_iter()
        .map(|k| kernel((k as f64 - (n / 2) as f64) * dx))
        .collect()
}

fn edge_ratio(kernel: &[f64]) -> f64 {
    let peak = kernel.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let edge = kernel[0].abs().max(kernel[kernel.len() - 1].abs());
    if peak == 0.0 {
        0.0
    } else {
        edge / peak
    }
}

/// `fftshift(ifft(fft(a) .* fft(b)))`, real part.
fn circular_convolution(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(n);
    let inverse = planner.plan_fft_inverse(n);
    let mut fa: Vec<Complex64> = a.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let mut fb: Vec<Complex64> = b.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    forward.process(&mut fa);
    forward.process(&mut fb);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    inverse.process(&mut fa);
    let scale = 1.0 / n as f64;
    let mut out: Vec<f64> = fa.iter().map(|c| c.re * scale).collect();
    out.rotate_left(n / 2);
    out
}

/// Solution at time `t` on the grid of the data.
///
/// The convolution is periodic over the grid length; a warning is attached
/// when the kernel has not decayed below [`DECAY_THRESHOLD`] of its peak at
/// the edges.
pub fn cauchy_solve(problem: &CauchyProblem, t: f64) -> Result<CauchySolution> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain(format!("t must be positive and finite, got {t}")));
    }
    let (nu, d) = (problem.nu, problem.diffusivity);
    let g = &problem.g;
    let (n, dx) = (g.n(), g.dx());
    let mut warnings = Vec::new();
    let mut note = |kernel: &[f64]| {
        let ratio = edge_ratio(kernel);
        if ratio > DECAY_THRESHOLD {
            log::warn!("kernel edge ratio {ratio:e} exceeds {DECAY_THRESHOLD:e}");
            warnings.push(SolverWarning::KernelNotDecayed { edge_ratio: ratio });
        }
    };

    let kernel = sample_kernel(|x| cauchy_green(nu, d, x, t), n, dx)?;
    note(&kernel);
    let mut u = circular_convolution(g.values(), &kernel);

    if let Some(p) = &problem.p {
        let primitive = sample_kernel(|x| cauchy_green_primitive(nu, d, x, t), n, dx)?;
        note(&primitive);
        for (ui, vi) in u.iter_mut().zip(circular_convolution(p.values(), &primitive)) {
            *ui += vi;
        }
    }
    for v in &mut u {
        *v *= dx;
    }
    Ok(CauchySolution {
        u: g.with_values(u),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn heat_kernel_values() {
        let at0 = cauchy_green(0.5, 1.0, 0.0, 1.0).unwrap();
        assert!((at0 - 0.5 / PI.sqrt()).abs() < 1e-15);
        let at2 = cauchy_green(0.5, 1.0, 2.0, 1.0).unwrap();
        assert!((at2 - (-1.0f64).exp() / (2.0 * PI.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn kernel_is_even() {
        for x in [0.3, 1.0, 2.7] {
            assert_eq!(
                cauchy_green(0.3, 2.0, x, 1.5).unwrap(),
                cauchy_green(0.3, 2.0, -x, 1.5).unwrap()
            );
        }
    }

    #[test]
    fn parameter_ranges() {
        assert!(cauchy_green(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(cauchy_green(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(cauchy_green(0.5, 0.0, 1.0, 1.0).is_err());
        assert!(cauchy_green(0.5, 1.0, 1.0, 0.0).is_err());
        assert!(cauchy_green_primitive(0.5, 1.0, 1.0, 1.0).is_err());
        assert!(cauchy_green_primitive(0.75, 1.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn problem_invariants() {
        let g = GridFunction::symmetric(5.0, 64, |_| 0.0).unwrap();
        let other = GridFunction::symmetric(4.0, 64, |_| 0.0).unwrap();
        assert!(CauchyProblem::new(0.5, 1.0, g.clone(), None).is_ok());
        assert!(CauchyProblem::new(0.5, 1.0, g.clone(), Some(g.clone())).is_err());
        assert!(CauchyProblem::new(0.75, 1.0, g.clone(), None).is_err());
        assert!(CauchyProblem::new(0.75, 1.0, g.clone(), Some(g.clone())).is_ok());
        assert!(CauchyProblem::new(0.75, 1.0, g.clone(), Some(other)).is_err());
        assert!(CauchyProblem::new(0.0, 1.0, g.clone(), None).is_err());
        assert!(CauchyProblem::new(0.5, -1.0, g, None).is_err());
    }

    #[test]
    fn convolution_with_unit_impulse_is_identity() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
        let mut delta = [0.0; 8];
        delta[4] = 1.0; // offset zero sits at index n/2
        let c = circular_convolution(&a, &delta);
        for (x, y) in c.iter().zip(a) {
            assert!((x - y).abs() < 1e-14);
        }
    }
}
