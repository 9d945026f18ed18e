//! Closed-form Green's-function solutions of three time-fractional problems,
//! with the Wright function as kernel.

pub mod cauchy;
pub mod grid;
pub mod signalling;
pub mod tworod;

pub use cauchy::{
    cauchy_green, cauchy_green_primitive, cauchy_solve, CauchyProblem, CauchySolution,
    SolverWarning, DECAY_THRESHOLD,
};
pub use grid::GridFunction;
pub use signalling::{signalling_green, signalling_solve};
pub use tworod::{tworod_solve, TwoRodConfig};
