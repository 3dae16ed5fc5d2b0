//! One-loop free energy per unit plate area.
//!
//! `F₀ = −π²L/(45β⁴) + ζ(3)/(2πβ³) + G(β, L)` where `G` is the boundary
//! sum `T Σ_n ∫ d²k/(2π)² ln(1 − e^{−2γL})`. The first two terms are the
//! bulk photon gas and the `L`-independent plate constant; at low
//! temperature they cancel against the temperature dependence of `G`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::domain::Regime;
use crate::error::Result;
use crate::modesum::{check_positive, image_series, SumConfig, SumValue};
use crate::specfun::{polylog_neg_triple, ZETA3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedLow,
    ClosedHigh,
    Numeric,
}

/// Named contributions to the free energy. Absent terms are zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct FreeEnergyParts {
    pub blackbody: f64,
    pub plate_constant: f64,
    pub boundary_sum: f64,
    pub order_alpha_a: f64,
    pub order_alpha_b: f64,
}

impl FreeEnergyParts {
    pub fn sum(&self) -> f64 {
        self.blackbody + self.plate_constant + self.boundary_sum + self.order_alpha_a + self.order_alpha_b
    }
}

/// Closed-form value quoted alongside a numeric result in a limiting regime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormAnnotation {
    pub regime: Regime,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FreeEnergyResult {
    pub total: f64,
    pub parts: FreeEnergyParts,
    pub method: Method,
    pub error_bound: f64,
    pub closed_form: Option<ClosedFormAnnotation>,
}

impl FreeEnergyResult {
    pub(crate) fn from_parts(parts: FreeEnergyParts, error_bound: f64) -> Self {
        Self {
            total: parts.sum(),
            parts,
            method: Method::Numeric,
            error_bound,
            closed_form: None,
        }
    }
}

/// `−π²L/(45β⁴)`, the photon gas filling the gap.
pub fn blackbody(beta: f64, gap: f64) -> f64 {
    -PI * PI * gap / (45.0 * beta.powi(4))
}

/// `ζ(3)/(2πβ³)`, the `L`-independent constant from the plate subtraction.
pub fn plate_constant(beta: f64) -> f64 {
    ZETA3 / (2.0 * PI * beta.powi(3))
}

/// `G(β, L) = T Σ_n ∫ d²k/(2π)² ln(1 − e^{−2γL})`, dimension length⁻³.
///
/// Image expansion `ln(1 − y) = −Σ_j y^j/j` with the exact moments
/// `∫_a^∞ γ e^{−cγ} dγ = e^{−ac}(a/c + 1/c²)`; the static mode gives
/// `−Tζ(3)/(8πL²)`.
pub fn boundary_log_sum(beta: f64, gap: f64, cfg: &SumConfig) -> Result<SumValue> {
    check_positive("beta", beta)?;
    check_positive("L", gap)?;
    let t = 1.0 / beta;
    let a0 = 2.0 * PI * t;
    let pref = t / (2.0 * PI);
    let static_part = -t * ZETA3 / (8.0 * PI * gap * gap);
    let one_minus_q = -(-2.0 * a0 * gap).exp_m1();
    image_series("boundary_log_sum", static_part, one_minus_q, cfg, |j| {
        let jf = j as f64;
        let c = 2.0 * jf * gap;
        let arg = a0 * c;
        let [li0, li1, _] = polylog_neg_triple((-arg).exp(), -(-arg).exp_m1());
        -pref / jf * (2.0 * a0 * li1 / c + 2.0 * li0 / (c * c))
    })
}

/// Direct double sum over `(n, j)` for [`boundary_log_sum`]. Test oracle.
#[doc(hidden)]
pub fn boundary_log_sum_bruteforce(beta: f64, gap: f64, cfg: &SumConfig) -> Result<SumValue> {
    check_positive("beta", beta)?;
    check_positive("L", gap)?;
    let t = 1.0 / beta;
    let a0 = 2.0 * PI * t;
    let pref = t / (2.0 * PI);
    let (n_max, j_max) = cfg.oracle_terms;
    let moment = |a: f64, c: f64| (-a * c).exp() * (a / c + 1.0 / (c * c));

    let mut static_row = 0.0;
    for j in (1..=j_max).rev() {
        let jf = j as f64;
        static_row += moment(0.0, 2.0 * jf * gap) / jf;
    }
    // Σ_{j>J} 1/(4L² j³) by the midpoint integral
    let jm = j_max as f64 + 0.5;
    let static_tail = 1.0 / (4.0 * gap * gap) / (2.0 * jm * jm);
    static_row += static_tail;

    let mut total = static_row;
    let mut terms = j_max;
    for n in 1..=n_max {
        let a = a0 * n as f64;
        let mut row = 0.0;
        for j in 1..=j_max {
            let jf = j as f64;
            let term = moment(a, 2.0 * jf * gap) / jf;
            row += term;
            terms += 1;
            if term <= 1e-20 * (total + row) {
                break;
            }
        }
        total += 2.0 * row;
        if row <= 1e-20 * total {
            break;
        }
    }
    Ok(SumValue {
        value: -pref * total,
        error_bound: pref * (static_tail / (jm * jm) + 1e-18 * total),
        terms_used: terms,
        static_part: -pref * static_row,
    })
}

/// One-loop free energy per unit area at any temperature.
pub fn free_energy_f0(beta: f64, gap: f64, cfg: &SumConfig) -> Result<FreeEnergyResult> {
    let g = boundary_log_sum(beta, gap, cfg)?;
    let parts = FreeEnergyParts {
        blackbody: blackbody(beta, gap),
        plate_constant: plate_constant(beta),
        boundary_sum: g.value,
        ..FreeEnergyParts::default()
    };
    Ok(FreeEnergyResult::from_parts(parts, g.error_bound))
}

/// `−π²/(720L³)`, the zero-temperature Casimir energy per unit area.
pub fn casimir_low_t_free(gap: f64) -> f64 {
    -PI * PI / (720.0 * gap.powi(3))
}

/// `−π²L/(45β⁴) + ζ(3)/(2πβ³) − ζ(3)/(8πβL²)`.
pub fn free_high_t_closed(beta: f64, gap: f64) -> f64 {
    blackbody(beta, gap) + plate_constant(beta) - ZETA3 / (8.0 * PI * beta * gap * gap)
}
