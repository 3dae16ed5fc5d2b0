//! Matsubara sums of transverse-momentum integrals between the plates.
//!
//! Every sum here has the form `T Σ_n ∫ d²k/(2π)² g(γ)` with
//! `γ = √(ω_n² + k²)` and `ω_n = 2πnT`. The radial integral is rewritten as
//! `(1/2π) ∫_{|ω_n|}^∞ γ g(γ) dγ`, the Bose factor is expanded in plate
//! images `e^{-2jγL}`, and each image is integrated exactly. The sum over
//! `n` is then geometric in `x_j = e^{-4πjLT}` and collapses onto
//! `Li_0`, `Li_{-1}`, `Li_{-2}`. The static mode (`n = 0`) sums over `j` to a
//! zeta value, so only the non-static images need truncating, and those
//! decay geometrically.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{polylog_neg_triple, ZETA3};

/// Tolerances and truncation caps shared by the series engines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Cap on the plate-image index `j` (and on plate modes `m`).
    pub max_image: usize,
    /// Cap on `|n|` for paths that sum Matsubara modes explicitly.
    pub max_matsubara: usize,
    /// `(n_max, j_max)` for the brute-force double sum.
    pub oracle_terms: (usize, usize),
    pub r_low: f64,
    pub r_high: f64,
}

impl Default for SumConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-11,
            abs_tol: 1e-300,
            max_image: 1_000_000,
            max_matsubara: 1_000_000,
            oracle_terms: (2000, 2000),
            r_low: 5.0,
            r_high: 5.0,
        }
    }
}

impl SumConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |field: &'static str, reason: &str| {
            Err(Error::Validation {
                field,
                reason: reason.to_string(),
            })
        };
        if !(self.rel_tol > 0.0) {
            return bad("rel_tol", "must be > 0");
        }
        if !(self.abs_tol > 0.0) {
            return bad("abs_tol", "must be > 0");
        }
        if self.max_image < 1 || self.max_matsubara < 1 {
            return bad("max_image", "caps must be >= 1");
        }
        if self.oracle_terms.0 < 1 || self.oracle_terms.1 < 1 {
            return bad("oracle_terms", "caps must be >= 1");
        }
        if !(self.r_low > 0.0) || !(self.r_high > 0.0) {
            return bad("r_low", "regime thresholds must be > 0");
        }
        Ok(())
    }

    /// Same caps, relative tolerance at machine precision. Numerical
    /// derivatives need the series noise well below the step's resolution.
    pub fn tightened(&self) -> Self {
        Self {
            rel_tol: f64::EPSILON.min(self.rel_tol),
            ..*self
        }
    }
}

/// A series value with a guaranteed bound on the truncated tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumValue {
    pub value: f64,
    pub error_bound: f64,
    pub terms_used: usize,
    /// Contribution of the static Matsubara mode alone.
    pub static_part: f64,
}

impl SumValue {
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            error_bound: self.error_bound * factor.abs(),
            terms_used: self.terms_used,
            static_part: self.static_part * factor,
        }
    }
}

pub(crate) fn check_positive(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Validation {
            field,
            reason: format!("{value} must be finite and > 0"),
        })
    }
}

/// Sum non-static image terms `t_1, t_2, ...` that satisfy
/// `|t_{j+1}| <= q |t_j|`, stopping once the geometric tail bound
/// `|t_j| q/(1-q)` meets the tolerance.
pub(crate) fn image_series<F>(
    what: &'static str,
    static_part: f64,
    one_minus_q: f64,
    cfg: &SumConfig,
    term: F,
) -> Result<SumValue>
where
    F: Fn(usize) -> f64,
{
    let q = 1.0 - one_minus_q;
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut tail = 0.0;
    let mut j = 0;
    while j < cfg.max_image {
        j += 1;
        let t = term(j);
        sum += t;
        abs_sum += t.abs();
        tail = t.abs() * q / one_minus_q;
        let total = (static_part + sum).abs();
        if tail <= (cfg.rel_tol * total).max(cfg.abs_tol) {
            let rounding = 4.0 * f64::EPSILON * (abs_sum * j as f64 + static_part.abs());
            return Ok(SumValue {
                value: static_part + sum,
                error_bound: tail + rounding,
                terms_used: j,
                static_part,
            });
        }
    }
    Err(Error::Convergence {
        what,
        terms: j,
        tail,
    })
}

/// `S(β, L) = T Σ_n ∫ d²k/(2π)² γ/(e^{2γL} − 1)`, dimension length⁻³.
///
/// The order-α plate contribution is `F₁⁽ᵇ⁾ = b₁ · 2L · S`.
pub fn inter_sum(beta: f64, gap: f64, cfg: &SumConfig) -> Result<SumValue> {
    check_positive("beta", beta)?;
    check_positive("L", gap)?;
    let t = 1.0 / beta;
    let a0 = 2.0 * PI * t;
    let pref = t / (2.0 * PI);
    let static_part = t * static_mode_integral(gap);
    let one_minus_q = -(-2.0 * a0 * gap).exp_m1();
    image_series("inter_sum", static_part, one_minus_q, cfg, |j| {
        let c = 2.0 * j as f64 * gap;
        let arg = a0 * c;
        let [li0, li1, li2] = polylog_neg_triple((-arg).exp(), -(-arg).exp_m1());
        pref * (2.0 * a0 * a0 * li2 / c + 4.0 * a0 * li1 / (c * c) + 4.0 * li0 / (c * c * c))
    })
}

/// `∫_a^∞ γ² e^{-cγ} dγ`.
pub(crate) fn exp_moment2(a: f64, c: f64) -> f64 {
    (-a * c).exp() * (a * a / c + 2.0 * a / (c * c) + 2.0 / (c * c * c))
}

/// Direct truncated double sum over `(n, j)` for [`inter_sum`], with no
/// polylogarithm resummation. Test oracle.
///
/// The static row's power-law tail beyond `j_max` is added from the
/// midpoint integral `Σ_{j>J} j⁻³ ≈ 1/(2(J+½)²)`.
#[doc(hidden)]
pub fn inter_sum_bruteforce(beta: f64, gap: f64, cfg: &SumConfig) -> Result<SumValue> {
    check_positive("beta", beta)?;
    check_positive("L", gap)?;
    let t = 1.0 / beta;
    let a0 = 2.0 * PI * t;
    let pref = t / (2.0 * PI);
    let (n_max, j_max) = cfg.oracle_terms;

    let mut static_row = 0.0;
    for j in (1..=j_max).rev() {
        static_row += exp_moment2(0.0, 2.0 * j as f64 * gap);
    }
    let jm = j_max as f64 + 0.5;
    let static_tail = 2.0 / (8.0 * gap.powi(3)) / (2.0 * jm * jm);
    static_row += static_tail;

    let mut total = static_row;
    let mut terms = j_max;
    let mut last_row = 0.0;
    for n in 1..=n_max {
        let a = a0 * n as f64;
        let mut row = 0.0;
        for j in 1..=j_max {
            let term = exp_moment2(a, 2.0 * j as f64 * gap);
            row += term;
            terms += 1;
            if term <= 1e-20 * (total + row) {
                break;
            }
        }
        // ±n
        total += 2.0 * row;
        last_row = 2.0 * row;
        if row <= 1e-20 * total {
            break;
        }
    }
    Ok(SumValue {
        value: pref * total,
        error_bound: pref * (last_row + static_tail / (jm * jm) + 1e-18 * total),
        terms_used: terms,
        static_part: pref * static_row,
    })
}

/// `(1/2π) ∫₀^∞ γ² dγ/(e^{2γL} − 1) = ζ(3)/(8πL³)`.
pub fn static_mode_integral(gap: f64) -> f64 {
    ZETA3 / (8.0 * PI * gap.powi(3))
}

/// Both sides of `Σ_{m∈ℤ} 1/(γ² + k_m²) = (2L/γ)[½ + 1/(e^{2γL} − 1)]`,
/// `k_m = mπ/L`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResummationCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// The left side is summed for `|m| <= trunc` plus the midpoint-integral
/// tail `2∫_{trunc+½}^∞ dm/(γ² + (mπ/L)²)`.
pub fn resummation_identity(gamma: f64, gap: f64, trunc: usize) -> ResummationCheck {
    let k = PI / gap;
    let g2 = gamma * gamma;
    let mut lhs = 0.0;
    for m in (1..=trunc).rev() {
        let km = k * m as f64;
        lhs += 2.0 / (g2 + km * km);
    }
    lhs += 1.0 / g2;
    let edge = trunc as f64 + 0.5;
    lhs += 2.0 / (k * gamma) * (0.5 * PI - (k * edge / gamma).atan());

    let rhs = resummation_rhs(gamma, gap);
    ResummationCheck {
        lhs,
        rhs,
        residual: ((lhs - rhs) / rhs).abs(),
    }
}

/// `(2L/γ)[½ + 1/(e^{2γL} − 1)]`.
pub fn resummation_rhs(gamma: f64, gap: f64) -> f64 {
    2.0 * gap / gamma * (0.5 + 1.0 / (2.0 * gamma * gap).exp_m1())
}

/// Thermal part of the plate-mode representation:
/// `Σ_{m∈ℤ} ∫ d²k/(2π)² (k_m²/ω) n_B(βω)`, `ω = √(k² + k_m²)`,
/// which reduces to `(T/2π) Σ_{m∈ℤ} k_m² [−ln(1 − e^{−βk_m})]`.
///
/// The sum runs over all integers `m` (the `m = 0` term vanishes); with
/// this range `2L·S = π²/(240L³) + π²L/(45β⁴) − plate_thermal_sum` holds
/// exactly.
pub fn plate_thermal_sum(beta: f64, gap: f64, cfg: &SumConfig) -> Result<SumValue> {
    check_positive("beta", beta)?;
    check_positive("L", gap)?;
    let t = 1.0 / beta;
    let k = PI / gap;
    let x = (-beta * k).exp();
    let mut sum = 0.0;
    let mut tail = f64::INFINITY;
    let mut m = 0usize;
    while m < cfg.max_image {
        m += 1;
        let km = k * m as f64;
        let arg = beta * km;
        // −ln(1 − e^{−arg}) for ±m
        let log_term = -(-(-arg).exp()).ln_1p();
        sum += t / PI * km * km * log_term;

        // u_m = (T/π) k_m² y/(1−y) bounds each term from above and
        // u_{m+1}/u_m <= ((m+1)/m)² x.
        let next = km + k;
        let y = (-beta * next).exp();
        let u_next = t / PI * next * next * y / (-(-beta * next).exp_m1());
        let ratio = ((m as f64 + 2.0) / (m as f64 + 1.0)).powi(2) * x;
        if ratio < 1.0 {
            tail = u_next / (1.0 - ratio);
            if tail <= (cfg.rel_tol * sum).max(cfg.abs_tol) {
                return Ok(SumValue {
                    value: sum,
                    error_bound: tail + 4.0 * f64::EPSILON * m as f64 * sum,
                    terms_used: m,
                    static_part: 0.0,
                });
            }
        }
    }
    Err(Error::Convergence {
        what: "plate_thermal_sum",
        terms: m,
        tail,
    })
}
