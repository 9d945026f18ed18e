//! Elementary and Airy closed forms of the Mainardi function `M_nu`.

use std::f64::consts::PI;

use super::airy::airy_ai;
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MainardiClosedForm {
    /// `M_0(z) = exp(-z)`
    Exp0,
    /// `M_{1/2}(z) = exp(-z^2/4) / sqrt(pi)`
    GaussHalf,
    /// `M_{1/3}(z) = 3^(2/3) Ai(z / 3^(1/3))`
    AiryThird,
}

impl MainardiClosedForm {
    pub const ALL: [Self; 3] = [Self::Exp0, Self::GaussHalf, Self::AiryThird];

    /// The order `nu` this closed form corresponds to.
    pub fn nu(self) -> f64 {
        match self {
            Self::Exp0 => 0.0,
            Self::GaussHalf => 0.5,
            Self::AiryThird => 1.0 / 3.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Exp0 => "M_0",
            Self::GaussHalf => "M_1/2",
            Self::AiryThird => "M_1/3",
        }
    }
}

pub fn closed_form_mainardi(kind: MainardiClosedForm, z: f64) -> Result<f64> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(domain(format!(
            "closed-form Mainardi needs z >= 0, got {z}"
        )));
    }
    Ok(match kind {
        MainardiClosedForm::Exp0 => (-z).exp(),
        MainardiClosedForm::GaussHalf => (-0.25 * z * z).exp() / PI.sqrt(),
        MainardiClosedForm::AiryThird => 3f64.powf(2.0 / 3.0) * airy_ai(z / 3f64.powf(1.0 / 3.0))?,
    })
}
