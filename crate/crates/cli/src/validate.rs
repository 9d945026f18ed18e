use clap::{Args, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use wrightfn::oracle::{closed_form_mainardi, wright_series, MainardiClosedForm, SeriesOptions};
use wrightfn::{
    select_contour, trapezoid_sum, wright_eval_with, EvalPoint, Summation, ToleranceProfile,
    WrightOrder,
};

use crate::output::Table;
use crate::{CliError, Report, Values};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ClosedForms,
    Heatmap,
    Convergence,
    Params,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Heatmap lambdas.
    #[arg(long, allow_hyphen_values = true)]
    lambdas: Option<Values>,
    /// Heatmap real parts of mu; the Re(mu) sweep of `params`.
    #[arg(long, allow_hyphen_values = true)]
    mu_re: Option<Values>,
    /// Heatmap imaginary parts of mu.
    #[arg(long, allow_hyphen_values = true)]
    mu_im: Option<Values>,
    /// Sample points (`closed-forms`, `convergence`: z >= 0; `heatmap`: x).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Values>,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    t: f64,
}

const HEATMAP_THRESHOLD: f64 = 1e-9;
const PARAMS_REFERENCE_MU: f64 = 0.5;
const PARAMS_REFERENCE_N: usize = 15;

fn threshold(kind: MainardiClosedForm) -> f64 {
    match kind {
        MainardiClosedForm::AiryThird => 1e-10,
        _ => 1e-12,
    }
}

fn values_or(v: &Option<Values>, default: &str) -> Vec<f64> {
    match v {
        Some(v) => v.0.clone(),
        None => crate::grid::parse_values(default).expect("valid default"),
    }
}

fn relative(got: f64, reference: f64) -> f64 {
    let err = (got - reference).abs();
    if reference == 0.0 {
        err
    } else {
        err / reference.abs()
    }
}

pub fn run(args: &ValidateArgs, tol: &ToleranceProfile) -> Result<Report, CliError> {
    if !(args.t > 0.0) || !args.t.is_finite() {
        return Err(CliError::Domain(format!("t must be positive, got {}", args.t)));
    }
    match args.suite {
        Suite::ClosedForms => closed_forms(args, tol),
        Suite::Heatmap => heatmap(args, tol),
        Suite::Convergence => convergence(args, tol),
        Suite::Params => params(args, tol),
    }
}

fn mainardi_points(args: &ValidateArgs) -> Result<Vec<f64>, CliError> {
    let zs = values_or(&args.x, "0:0.25:5");
    if let Some(z) = zs.iter().find(|z| **z < 0.0) {
        return Err(CliError::Domain(format!("Mainardi points must be >= 0, got {z}")));
    }
    Ok(zs)
}

fn finish(table: Table, failures: Vec<String>) -> Report {
    let failure = (!failures.is_empty()).then(|| {
        CliError::Validation(format!("threshold failures:\n  {}", failures.join("\n  ")))
    });
    Report {
        table,
        single: false,
        failure,
    }
}

/// Evaluator against `exp(-z)`, the Gaussian and the Airy form, at `t = 1`.
fn closed_forms(args: &ValidateArgs, tol: &ToleranceProfile) -> Result<Report, CliError> {
    let zs = mainardi_points(args)?;
    let mut table = Table::new(&["case", "nu", "max_rel_err", "threshold", "pass"]);
    let mut failures = Vec::new();
    for kind in MainardiClosedForm::ALL {
        let order = WrightOrder::mainardi(kind.nu())?;
        let errors = zs
            .par_iter()
            .map(|&z| {
                let got = wright_eval_with(order, EvalPoint::new(1.0, z)?, tol)?.value.re;
                Ok(relative(got, closed_form_mainardi(kind, z)?))
            })
            .collect::<Result<Vec<f64>, wrightfn::Error>>()?;
        let worst = errors.iter().fold(0.0f64, |m, &e| if e.is_nan() { f64::NAN } else { m.max(e) });
        let pass = worst <= threshold(kind);
        if !pass {
            failures.push(format!("{}: max relative error {worst:e}", kind.name()));
        }
        table.push(vec![
            kind.name().into(),
            kind.nu().into(),
            worst.into(),
            threshold(kind).into(),
            pass.into(),
        ]);
    }
    Ok(finish(table, failures))
}

/// Norm-wise relative error against the double-double series, one row per
/// `(lambda, mu)` box.
fn heatmap(args: &ValidateArgs, tol: &ToleranceProfile) -> Result<Report, CliError> {
    let lambdas = values_or(&args.lambdas, "-0.9,-0.7,-0.5,-0.3,-0.1");
    let mu_re = values_or(&args.mu_re, "-1,0,0.5,1,2,3");
    let mu_im = values_or(&args.mu_im, "-1,0,1");
    let xs = values_or(&args.x, "-5:0.25:0");
    let t = args.t;
    let mut boxes = Vec::new();
    for &l in &lambdas {
        for &a in &mu_re {
            for &b in &mu_im {
                boxes.push(WrightOrder::new(l, Complex64::new(a, b))?);
            }
        }
    }
    let results = boxes
        .par_iter()
        .map(|&order| {
            let (mut num, mut den, mut oracle_ok) = (0.0, 0.0, true);
            for &x in &xs {
                let got = wright_eval_with(order, EvalPoint::new(t, x)?, tol)?.value;
                let z = Complex64::new(-x.abs() * t.powf(order.lambda()), 0.0);
                let s = wright_series(order, z, SeriesOptions::default());
                oracle_ok &= s.converged;
                let reference = s.value * ((order.mu() - 1.0) * t.ln()).exp();
                num += (got - reference).norm_sqr();
                den += reference.norm_sqr();
            }
            let err = if den > 0.0 { (num / den).sqrt() } else { num.sqrt() };
            Ok((err, oracle_ok))
        })
        .collect::<Result<Vec<_>, wrightfn::Error>>()?;

    let mut table = Table::new(&[
        "lambda",
        "mu_re",
        "mu_im",
        "rel_err",
        "log10_rel_err",
        "oracle_converged",
        "pass",
    ]);
    let mut failures = Vec::new();
    for (order, (err, oracle_ok)) in boxes.iter().zip(results) {
        let pass = oracle_ok && err <= HEATMAP_THRESHOLD;
        let (l, mu) = (order.lambda(), order.mu());
        if !pass {
            failures.push(format!(
                "lambda = {l}, mu = {}{:+}i: relative error {err:e}{}",
                mu.re,
                mu.im,
                if oracle_ok { "" } else { " (oracle not converged)" }
            ));
        }
        table.push(vec![
            l.into(),
            mu.re.into(),
            mu.im.into(),
            err.into(),
            err.log10().into(),
            oracle_ok.into(),
            pass.into(),
        ]);
    }
    Ok(finish(table, failures))
}

/// Error against the closed forms as the node count grows to the selected one.
fn convergence(args: &ValidateArgs, tol: &ToleranceProfile) -> Result<Report, CliError> {
    let zs: Vec<f64> = mainardi_points(args)?;
    let mut table = Table::new(&["case", "n_nodes", "selected", "max_rel_err"]);
    let mut failures = Vec::new();
    for kind in MainardiClosedForm::ALL {
        let order = WrightOrder::mainardi(kind.nu())?;
        let selected = select_contour(order.mu(), 1.0, tol)?;
        let reference = zs
            .iter()
            .map(|&z| closed_form_mainardi(kind, z))
            .collect::<Result<Vec<f64>, _>>()?;
        let rows = (1..=selected.n_nodes)
            .into_par_iter()
            .map(|n| {
                let params = selected.with_nodes(n, 1.0, tol.ell());
                let mut worst = 0.0f64;
                for (&z, &r) in zs.iter().zip(&reference) {
                    let s = trapezoid_sum(order, EvalPoint::new(1.0, z)?, &params, Summation::Halved)?;
                    let e = relative(s.value.re, r);
                    worst = if e.is_nan() { f64::NAN } else { worst.max(e) };
                }
                Ok((n, worst))
            })
            .collect::<Result<Vec<_>, wrightfn::Error>>()?;
        for &(n, worst) in &rows {
            let at_selected = n == selected.n_nodes;
            if at_selected && !(worst <= threshold(kind)) {
                failures.push(format!(
                    "{} at N = {n}: max relative error {worst:e}",
                    kind.name()
                ));
            }
            table.push(vec![kind.name().into(), n.into(), at_selected.into(), worst.into()]);
        }
    }
    Ok(finish(table, failures))
}

/// Selected contour parameters across `Re(mu)`.
fn params(args: &ValidateArgs, tol: &ToleranceProfile) -> Result<Report, CliError> {
    let mus = values_or(&args.mu_re, "-6:0.5:40");
    let t = args.t;
    let rows = mus
        .par_iter()
        .map(|&m| select_contour(Complex64::new(m, 0.0), t, tol).map(|p| (m, p)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::new(&["mu_re", "c", "xi", "n_nodes", "step", "gamma_t"]);
    let mut failures = Vec::new();
    let default_tol = tol.eps_target() == ToleranceProfile::DEFAULT_TARGET;
    for (m, p) in &rows {
        if default_tol && *m == PARAMS_REFERENCE_MU && p.n_nodes != PARAMS_REFERENCE_N {
            failures.push(format!("Re(mu) = {m}: N = {}, expected {PARAMS_REFERENCE_N}", p.n_nodes));
        }
        table.push(vec![
            (*m).into(),
            p.c.into(),
            p.xi.into(),
            p.n_nodes.into(),
            p.step.into(),
            (p.gamma * t).into(),
        ]);
    }
    // On the optimised branch N may not decrease and c may not increase with Re(mu).
    let mut optimised: Vec<_> = rows.iter().filter(|(m, _)| *m >= 2.0).collect();
    optimised.sort_by(|a, b| a.0.total_cmp(&b.0));
    for pair in optimised.windows(2) {
        let ((m0, p0), (m1, p1)) = (pair[0], pair[1]);
        if p1.n_nodes < p0.n_nodes {
            failures.push(format!("N decreases from {} to {} between Re(mu) = {m0} and {m1}", p0.n_nodes, p1.n_nodes));
        }
        if p1.c > p0.c {
            failures.push(format!("c increases from {} to {} between Re(mu) = {m0} and {m1}", p0.c, p1.c));
        }
    }
    Ok(finish(table, failures))
}
