//! `wrightfn`: point evaluation, validation sweeps, PDE demos and the series
//! oracle, with CSV or JSON output.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod demo;
mod eval;
mod grid;
mod oracle;
mod output;
mod validate;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{Format, Table};
use wrightfn::ToleranceProfile;

#[derive(Debug, Parser)]
#[command(name = "wrightfn", version, about = "Wright function of the second kind")]
struct Cli {
    /// Output encoding (csv by default, json for `oracle`).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Target accuracy of the contour evaluation; absolute tolerance of the
    /// series oracle.
    #[arg(long, global = true, default_value_t = ToleranceProfile::DEFAULT_TARGET)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate `t^(mu-1) W(-|x| t^lambda)` at one or more x.
    Eval(eval::EvalArgs),
    /// Run a validation suite; exit 1 if a threshold fails.
    Validate(validate::ValidateArgs),
    /// Emit solution data for a fractional PDE problem.
    Demo(demo::DemoArgs),
    /// Sum the power series at a complex point.
    Oracle(oracle::OracleArgs),
}

/// Values accepted as `a`, `a,b,c` or `start:step:stop`.
#[derive(Debug, Clone, PartialEq)]
pub struct Values(pub Vec<f64>);

impl std::str::FromStr for Values {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        grid::parse_values(s).map(Values)
    }
}

#[derive(Debug, Args, Clone, Copy)]
pub struct OrderArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Real part of mu.
    #[arg(long, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub mu_im: f64,
}

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Domain(String),
    NotConverged(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Domain(_) => 2,
            CliError::NotConverged(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Domain(m) | CliError::NotConverged(m) => m,
        }
    }
}

impl From<wrightfn::Error> for CliError {
    fn from(e: wrightfn::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Domain(format!("output: {e}"))
    }
}

/// What a command produced: the table and an optional failure to report
/// after it has been written.
pub struct Report {
    pub table: Table,
    pub single: bool,
    pub failure: Option<CliError>,
}

impl Report {
    pub fn ok(table: Table) -> Self {
        Self {
            table,
            single: false,
            failure: None,
        }
    }
}

fn emit(report: &Report, format: Format, out: Option<&PathBuf>) -> Result<(), CliError> {
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            CliError::Domain(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    if report.single && format == Format::Json {
        report.table.write_json_single(&mut sink)?;
    } else {
        report.table.write(format, &mut sink)?;
    }
    sink.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let tol = ToleranceProfile::with_target(cli.tol)?;
    let (report, default_format) = match &cli.command {
        Command::Eval(a) => (eval::run(a, &tol)?, Format::Csv),
        Command::Validate(a) => (validate::run(a, &tol)?, Format::Csv),
        Command::Demo(a) => (demo::run(a, &tol)?, Format::Csv),
        Command::Oracle(a) => (oracle::run(a, cli.tol)?, Format::Json),
    };
    emit(&report, cli.format.unwrap_or(default_format), cli.out.as_ref())?;
    match report.failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
