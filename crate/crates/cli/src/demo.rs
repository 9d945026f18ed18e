use clap::{Args, ValueEnum};
use rayon::prelude::*;
use wrightfn::pde::{
    cauchy_solve, signalling_solve, tworod_solve, CauchyProblem, GridFunction, TwoRodConfig,
};
use wrightfn::ToleranceProfile;

use crate::output::Table;
use crate::{CliError, Report, Values};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Cauchy,
    Signalling,
    Tworod,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    /// Orders for `cauchy` (default 0.25,0.5,0.75) and `signalling` (default 0.5).
    #[arg(long)]
    nu: Option<Values>,
    /// `tworod` exponents (default 0.5,1,1.5).
    #[arg(long)]
    alpha: Option<Values>,
    /// Time for `cauchy` and `tworod`; the time grid for `signalling`
    /// (default 0.1:0.1:2).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Values>,
    /// Position for `signalling` (default 1); the x grid for `tworod`
    /// (default -2.5:0.05:2.5).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Values>,
    /// Diffusivity for `cauchy` and `signalling`.
    #[arg(long, default_value_t = 1.0)]
    d: f64,
    /// `cauchy` grid size, a power of two.
    #[arg(long, default_value_t = 256)]
    n: usize,
    /// `cauchy` grid covers [-half_width, half_width).
    #[arg(long, default_value_t = 5.0)]
    half_width: f64,
    /// Absolute quadrature tolerance for `signalling`.
    #[arg(long, default_value_t = 1e-10)]
    quad_tol: f64,
    #[arg(long, default_value_t = 1.0)]
    p0: f64,
    #[arg(long, default_value_t = 0.5)]
    rho: f64,
    #[arg(long, default_value_t = 3.0)]
    a1: f64,
    #[arg(long, default_value_t = 1.0)]
    a2: f64,
    #[arg(long, default_value_t = 2.0)]
    k1: f64,
    #[arg(long, default_value_t = 6.0)]
    k2: f64,
}

fn values_or(v: &Option<Values>, default: &str) -> Vec<f64> {
    match v {
        Some(v) => v.0.clone(),
        None => crate::grid::parse_values(default).expect("valid default"),
    }
}

fn single(v: &Option<Values>, name: &str, default: f64) -> Result<f64, CliError> {
    match v {
        None => Ok(default),
        Some(Values(v)) if v.len() == 1 => Ok(v[0]),
        Some(_) => Err(CliError::Domain(format!("--{name} takes a single value here"))),
    }
}

pub fn run(args: &DemoArgs, _tol: &ToleranceProfile) -> Result<Report, CliError> {
    match args.problem {
        Problem::Cauchy => cauchy(args),
        Problem::Signalling => signalling(args),
        Problem::Tworod => tworod(args),
    }
}

/// Cell average of the unit square pulse on [-1, 1].
fn pulse_cell_average(x: f64, dx: f64) -> f64 {
    let lo = (x - 0.5 * dx).max(-1.0);
    let hi = (x + 0.5 * dx).min(1.0);
    ((hi - lo) / dx).clamp(0.0, 1.0)
}

/// Square pulse datum, zero initial velocity when `nu > 1/2`.
fn cauchy(args: &DemoArgs) -> Result<Report, CliError> {
    let nus = values_or(&args.nu, "0.25,0.5,0.75");
    let t = single(&args.t, "t", 1.0)?;
    let dx = 2.0 * args.half_width / args.n as f64;
    let g = GridFunction::symmetric(args.half_width, args.n, |x| pulse_cell_average(x, dx))?;
    let zero = GridFunction::symmetric(args.half_width, args.n, |_| 0.0)?;
    let mut table = Table::new(&["nu", "t", "x", "g", "u"]);
    for &nu in &nus {
        let p = (nu > 0.5).then(|| zero.clone());
        let sol = cauchy_solve(&CauchyProblem::new(nu, args.d, g.clone(), p)?, t)?;
        for w in &sol.warnings {
            eprintln!("warning: nu = {nu}: {w:?}");
        }
        for (i, (&gi, &ui)) in g.values().iter().zip(sol.u.values()).enumerate() {
            table.push(vec![nu.into(), t.into(), g.x(i).into(), gi.into(), ui.into()]);
        }
    }
    Ok(Report::ok(table))
}

/// Unit step signal at `x = 0`.
fn signalling(args: &DemoArgs) -> Result<Report, CliError> {
    let nus = values_or(&args.nu, "0.5");
    let x = single(&args.x, "x", 1.0)?;
    let ts = values_or(&args.t, "0.1:0.1:2");
    let mut table = Table::new(&["nu", "x", "t", "u", "quad_err"]);
    for &nu in &nus {
        let u = signalling_solve(|_| 1.0, nu, args.d, x, &ts, args.quad_tol)?;
        for (&t, q) in ts.iter().zip(&u) {
            if !q.converged {
                eprintln!("warning: nu = {nu}, t = {t}: quadrature tolerance not met");
            }
            table.push(vec![nu.into(), x.into(), t.into(), q.value.into(), q.error_estimate.into()]);
        }
    }
    Ok(Report::ok(table))
}

/// Each x is evaluated once; `x = 0` uses the rod-1 formula.
fn tworod(args: &DemoArgs) -> Result<Report, CliError> {
    let alphas = values_or(&args.alpha, "0.5,1,1.5");
    let t = single(&args.t, "t", 1.0)?;
    let xs = values_or(&args.x, "-2.5:0.05:2.5");
    let base = TwoRodConfig::new(args.p0, args.rho, args.a1, args.a2, args.k1, args.k2, 1.0)?;
    let mut table = Table::new(&["alpha", "t", "x", "temperature"]);
    for &alpha in &alphas {
        let cfg = base.with_alpha(alpha)?;
        let temps = xs
            .par_iter()
            .map(|&x| tworod_solve(&cfg, x + 0.0, t))
            .collect::<Result<Vec<f64>, _>>()?;
        for (&x, temp) in xs.iter().zip(temps) {
            table.push(vec![alpha.into(), t.into(), (x + 0.0).into(), temp.into()]);
        }
    }
    Ok(Report::ok(table))
}
