use clap::Args;
use num_complex::Complex64;
use wrightfn::oracle::{wright_series, SeriesOptions};
use wrightfn::WrightOrder;

use crate::output::Table;
use crate::{CliError, OrderArgs, Report};

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    order: OrderArgs,
    #[arg(long, allow_negative_numbers = true)]
    z: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    z_im: f64,
    #[arg(long, default_value_t = 1000)]
    max_terms: usize,
}

pub fn run(args: &OracleArgs, abs_tol: f64) -> Result<Report, CliError> {
    let o = args.order;
    let order = WrightOrder::new(o.lambda, Complex64::new(o.mu, o.mu_im))?;
    if !(abs_tol > 0.0) {
        return Err(CliError::Domain(format!("tolerance must be positive, got {abs_tol}")));
    }
    if args.max_terms == 0 {
        return Err(CliError::Domain("max-terms must be at least 1".into()));
    }
    let z = Complex64::new(args.z, args.z_im);
    let s = wright_series(
        order,
        z,
        SeriesOptions {
            abs_tol,
            max_terms: args.max_terms,
            ..SeriesOptions::default()
        },
    );
    let mut table = Table::new(&[
        "lambda",
        "mu_re",
        "mu_im",
        "z_re",
        "z_im",
        "re",
        "im",
        "terms_used",
        "tail_bound",
        "rounding_bound",
        "converged",
    ]);
    table.push(vec![
        o.lambda.into(),
        o.mu.into(),
        o.mu_im.into(),
        args.z.into(),
        args.z_im.into(),
        s.value.re.into(),
        s.value.im.into(),
        s.terms_used.into(),
        s.tail_bound.into(),
        s.rounding_bound.into(),
        s.converged.into(),
    ]);
    let failure = (!s.converged).then(|| {
        CliError::NotConverged(format!(
            "series did not converge: tail {:e}, rounding {:e} after {} terms",
            s.tail_bound, s.rounding_bound, s.terms_used
        ))
    });
    Ok(Report {
        table,
        single: true,
        failure,
    })
}
