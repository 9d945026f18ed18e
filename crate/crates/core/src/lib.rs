//! Evaluation of the Wright function of the second kind,
//! `f(t; x) = t^(mu-1) W_{lambda,mu}(-|x| t^lambda)` with `-1 < lambda <= 0`,
//! by inverting its Laplace transform `s^(-mu) exp(-|x| s^(-lambda))` along a
//! parabolic contour with the trapezoidal rule.
//!
//! ```
//! use wrightfn::{wright_eval, EvalPoint, WrightOrder};
//!
//! // M_{1/2}(x) = exp(-x^2/4) / sqrt(pi)
//! let r = wright_eval(WrightOrder::mainardi(0.5)?, EvalPoint::new(1.0, 1.0)?)?;
//! assert!((r.value.re - (-0.25f64).exp() / std::f64::consts::PI.sqrt()).abs() < 1e-14);
//! # Ok::<(), wrightfn::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod brent;
pub mod contour;
pub mod error;
pub mod oracle;
pub mod pde;
pub mod quad;
pub mod wright;

pub use contour::{select_contour, ContourParams, ToleranceProfile};
pub use error::{Error, Result};
pub use wright::{
    mainardi_eval, trapezoid_sum, wright_eval, wright_eval_with, AccuracyWarning, EvalPoint,
    EvalResult, Summation, TrapezoidSum, WrightOrder,
};
