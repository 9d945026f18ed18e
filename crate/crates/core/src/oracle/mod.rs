//! Independent reference evaluations: gamma machinery, the truncated Wright
//! series, the Airy function and the closed-form Mainardi cases.

pub mod airy;
pub mod closed_form;
pub mod dd;
pub mod gamma;
pub mod series;

pub use airy::airy_ai;
pub use closed_form::{closed_form_mainardi, MainardiClosedForm};
pub use gamma::{gamma, ln_gamma, recip_gamma, recip_gamma_real};
pub use series::{wright_series, SeriesMode, SeriesOptions, SeriesResult};
