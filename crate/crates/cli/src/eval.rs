use clap::Args;
use num_complex::Complex64;
use rayon::prelude::*;
use wrightfn::{wright_eval_with, EvalPoint, ToleranceProfile, WrightOrder};

use crate::output::Table;
use crate::{CliError, OrderArgs, Report, Values};

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    order: OrderArgs,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    t: f64,
    /// `a`, `a,b,c` or `start:step:stop`.
    #[arg(long, allow_hyphen_values = true)]
    x: Values,
}

pub const COLUMNS: [&str; 9] = [
    "lambda", "mu_re", "mu_im", "t", "x", "re", "im", "est_roundoff", "n_nodes",
];

pub fn run(args: &EvalArgs, tol: &ToleranceProfile) -> Result<Report, CliError> {
    let o = args.order;
    let order = WrightOrder::new(o.lambda, Complex64::new(o.mu, o.mu_im))?;
    let results = args
        .x
        .0
        .par_iter()
        .map(|&x| wright_eval_with(order, EvalPoint::new(args.t, x)?, tol).map(|r| (x, r)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::new(&COLUMNS);
    for (x, r) in results {
        for w in &r.warnings {
            eprintln!("warning: x = {x}: {w}");
        }
        table.push(vec![
            o.lambda.into(),
            o.mu.into(),
            o.mu_im.into(),
            args.t.into(),
            x.into(),
            r.value.re.into(),
            r.value.im.into(),
            r.est_roundoff.into(),
            r.contour.n_nodes.into(),
        ]);
    }
    Ok(Report::ok(table))
}
