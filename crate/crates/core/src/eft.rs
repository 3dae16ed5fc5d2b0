//! Order-α correction from the 4d effective theory.
//!
//! `F₁ = −b₁ ∫₀ᴸ dz ⟨F_{3α}²⟩` splits into a bulk piece from the
//! `L`-independent propagator, `F₁⁽ᵃ⁾ ∝ b₁ L T⁴`, and a plate piece from the
//! image part, `F₁⁽ᵇ⁾ = b₁ · 2L · S(β, L)` with `S` the mode sum in
//! [`crate::modesum::inter_sum`].
//!
//! The two printed high-/low-temperature limits do not agree on the sign of
//! `F₁⁽ᵃ⁾`. [`SignConvention`] makes that choice explicit.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::domain::{b1_coefficient, classify_regime, PlateSystem, Regime};
use crate::error::Result;
use crate::freefield::{self, ClosedFormAnnotation, FreeEnergyParts, FreeEnergyResult};
use crate::modesum::{inter_sum, SumConfig, SumValue};
use crate::specfun::ZETA3;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `F₁⁽ᵃ⁾ = −b₁π²L/(45β⁴)`.
    #[default]
    AsPrinted,
    /// `F₁⁽ᵃ⁾ = +b₁π²L/(45β⁴)`, the sign the high-temperature form needs.
    Reconciled,
}

impl SignConvention {
    pub const ALL: [SignConvention; 2] = [SignConvention::AsPrinted, SignConvention::Reconciled];

    pub fn as_str(&self) -> &'static str {
        match self {
            SignConvention::AsPrinted => "as_printed",
            SignConvention::Reconciled => "reconciled",
        }
    }

    fn bulk_sign(&self) -> f64 {
        match self {
            SignConvention::AsPrinted => -1.0,
            SignConvention::Reconciled => 1.0,
        }
    }
}

impl std::str::FromStr for SignConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "as_printed" => Ok(SignConvention::AsPrinted),
            "reconciled" => Ok(SignConvention::Reconciled),
            other => Err(format!("unknown sign convention '{other}'")),
        }
    }
}

/// Bulk piece `F₁⁽ᵃ⁾ = ∓b₁π²L/(45β⁴)`; exact at every temperature.
pub fn f1a(beta: f64, gap: f64, b1: f64, conv: SignConvention) -> f64 {
    conv.bulk_sign() * b1 * PI * PI * gap / (45.0 * beta.powi(4))
}

/// Plate piece `F₁⁽ᵇ⁾ = b₁ · 2L · S(β, L)`.
pub fn f1b(beta: f64, gap: f64, b1: f64, cfg: &SumConfig) -> Result<SumValue> {
    Ok(inter_sum(beta, gap, cfg)?.scaled(2.0 * b1 * gap))
}

/// `b₁π²/(240L³) + b₁π²L/(45β⁴)`, valid for β ≫ L.
pub fn f1b_low_t_closed(beta: f64, gap: f64, b1: f64) -> f64 {
    b1 * PI * PI / (240.0 * gap.powi(3)) + b1 * PI * PI * gap / (45.0 * beta.powi(4))
}

/// `b₁ζ(3)/(4πβL²)`, valid for β ≪ L.
pub fn f1b_high_t_closed(beta: f64, gap: f64, b1: f64) -> f64 {
    b1 * ZETA3 / (4.0 * PI * beta * gap * gap)
}

/// `−π²/(720L³)·[1 − 9α/(32mL)]`; no temperature dependence.
pub fn two_loop_low_t(gap: f64, mass: f64, alpha: f64) -> f64 {
    -PI * PI / (720.0 * gap.powi(3)) * (1.0 - 9.0 * alpha / (32.0 * mass * gap))
}

/// `−π²L/(45β⁴)[1 − 3α/(32mL)] + ζ(3)/(2πβ³) − ζ(3)/(8πβL²)[1 − 3α/(16mL)]`.
pub fn two_loop_high_t(beta: f64, gap: f64, mass: f64, alpha: f64) -> f64 {
    -PI * PI * gap / (45.0 * beta.powi(4)) * (1.0 - 3.0 * alpha / (32.0 * mass * gap))
        + ZETA3 / (2.0 * PI * beta.powi(3))
        - ZETA3 / (8.0 * PI * beta * gap * gap) * (1.0 - 3.0 * alpha / (16.0 * mass * gap))
}

/// The same high-temperature form written in terms of `b₁` directly
/// (`3α/(32mL) = b₁`, `3α/(16mL) = 2b₁`).
pub fn two_loop_high_t_from_b1(beta: f64, gap: f64, b1: f64) -> f64 {
    -PI * PI * gap / (45.0 * beta.powi(4)) * (1.0 - b1) + ZETA3 / (2.0 * PI * beta.powi(3))
        - ZETA3 / (8.0 * PI * beta * gap * gap) * (1.0 - 2.0 * b1)
}

/// Order-α part of the printed high-temperature form:
/// `b₁[π²L/(45β⁴) + ζ(3)/(4πβL²)]`.
pub fn two_loop_high_t_alpha_part(beta: f64, gap: f64, b1: f64) -> f64 {
    b1 * (PI * PI * gap / (45.0 * beta.powi(4)) + ZETA3 / (4.0 * PI * beta * gap * gap))
}

/// Order-α part of the printed low-temperature form: `b₁π²/(240L³)`.
pub fn two_loop_low_t_alpha_part(gap: f64, b1: f64) -> f64 {
    b1 * PI * PI / (240.0 * gap.powi(3))
}

/// Closed-form two-loop value for the regime of `sys`, if it has one.
pub fn closed_form_for(sys: &PlateSystem, cfg: &SumConfig) -> Option<ClosedFormAnnotation> {
    match classify_regime(sys, cfg) {
        Regime::LowT => Some(ClosedFormAnnotation {
            regime: Regime::LowT,
            value: two_loop_low_t(sys.gap, sys.mass, sys.alpha),
        }),
        Regime::HighT => Some(ClosedFormAnnotation {
            regime: Regime::HighT,
            value: two_loop_high_t(sys.beta, sys.gap, sys.mass, sys.alpha),
        }),
        Regime::Crossover => None,
    }
}

/// `F₀ + F₁⁽ᵃ⁾ + F₁⁽ᵇ⁾` evaluated numerically at any temperature.
pub fn total_free_energy(sys: &PlateSystem, cfg: &SumConfig, conv: SignConvention) -> Result<FreeEnergyResult> {
    let b1 = b1_coefficient(sys.alpha, sys.mass, sys.gap)?;
    let f0 = freefield::free_energy_f0(sys.beta, sys.gap, cfg)?;
    let (order_b, err_b) = if b1 == 0.0 {
        (0.0, 0.0)
    } else {
        let v = f1b(sys.beta, sys.gap, b1, cfg)?;
        (v.value, v.error_bound)
    };
    let parts = FreeEnergyParts {
        order_alpha_a: f1a(sys.beta, sys.gap, b1, conv),
        order_alpha_b: order_b,
        ..f0.parts
    };
    let mut result = FreeEnergyResult::from_parts(parts, f0.error_bound + err_b);
    result.closed_form = closed_form_for(sys, cfg);
    Ok(result)
}
