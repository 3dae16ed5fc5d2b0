//! Force and entropy per unit area from derivatives of the free energy.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::domain::{classify_regime, PlateSystem, Regime};
use crate::eft::{total_free_energy, SignConvention};
use crate::error::{Error, Result};
use crate::freefield::blackbody;
use crate::modesum::SumConfig;
use crate::specfun::ZETA3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    Central2,
    Central4,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivativeConfig {
    /// Step as a fraction of the variable being differentiated.
    pub step_rel: f64,
    pub scheme: Scheme,
    /// Drop the bulk photon gas (∝ L) before differentiating in L.
    pub subtract_bulk: bool,
    /// Differentiate the regime's closed form instead when one applies.
    pub prefer_closed_form: bool,
}

impl Default for DerivativeConfig {
    fn default() -> Self {
        Self {
            step_rel: 1e-5,
            scheme: Scheme::Central2,
            subtract_bulk: false,
            prefer_closed_form: false,
        }
    }
}

impl DerivativeConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.step_rel > 0.0 && self.step_rel < 1e-2) {
            return Err(Error::Validation {
                field: "step_rel",
                reason: format!("{} not in (0, 1e-2)", self.step_rel),
            });
        }
        Ok(())
    }
}

fn central_difference<F>(f: F, x: f64, dcfg: &DerivativeConfig) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    dcfg.validate()?;
    let h = x * dcfg.step_rel;
    if !(h > 0.0) || x + h == x || x - 2.0 * h <= 0.0 {
        return Err(Error::StepCollapse(format!("step {h} at {x}")));
    }
    match dcfg.scheme {
        Scheme::Central2 => Ok((f(x + h)? - f(x - h)?) / (2.0 * h)),
        Scheme::Central4 => {
            Ok((-f(x + 2.0 * h)? + 8.0 * f(x + h)? - 8.0 * f(x - h)? + f(x - 2.0 * h)?) / (12.0 * h))
        }
    }
}

fn closed_form_regime(sys: &PlateSystem, cfg: &SumConfig, dcfg: &DerivativeConfig) -> Option<Regime> {
    if !dcfg.prefer_closed_form {
        return None;
    }
    match classify_regime(sys, cfg) {
        Regime::Crossover => None,
        r => Some(r),
    }
}

/// `−∂F/∂L` per unit area; negative means the plates attract.
///
/// `b₁ = 3α/(32mL)` is re-evaluated at each displaced gap.
pub fn casimir_force(
    sys: &PlateSystem,
    cfg: &SumConfig,
    dcfg: &DerivativeConfig,
    conv: SignConvention,
) -> Result<f64> {
    if let Some(regime) = closed_form_regime(sys, cfg, dcfg) {
        return Ok(closed_form_force(sys, regime, dcfg.subtract_bulk));
    }
    let tight = cfg.tightened();
    let free_energy = |gap: f64| -> Result<f64> {
        let moved = PlateSystem { gap, ..*sys };
        let r = total_free_energy(&moved, &tight, conv)?;
        Ok(if dcfg.subtract_bulk {
            r.total - r.parts.blackbody
        } else {
            r.total
        })
    };
    Ok(-central_difference(free_energy, sys.gap, dcfg)?)
}

/// `S = −∂F/∂T = β² ∂F/∂β` per unit area.
pub fn entropy(sys: &PlateSystem, cfg: &SumConfig, dcfg: &DerivativeConfig, conv: SignConvention) -> Result<f64> {
    if let Some(regime) = closed_form_regime(sys, cfg, dcfg) {
        return Ok(closed_form_entropy(sys, regime));
    }
    let tight = cfg.tightened();
    let free_energy = |beta: f64| -> Result<f64> {
        let moved = PlateSystem { beta, ..*sys };
        Ok(total_free_energy(&moved, &tight, conv)?.total)
    };
    Ok(sys.beta * sys.beta * central_difference(free_energy, sys.beta, dcfg)?)
}

/// Analytic `−∂/∂L` of the printed low- or high-temperature form, with
/// `b₁ ∝ 1/L` differentiated along.
pub fn closed_form_force(sys: &PlateSystem, regime: Regime, subtract_bulk: bool) -> f64 {
    let PlateSystem {
        gap: l,
        beta,
        mass: m,
        alpha,
    } = *sys;
    let t = 1.0 / beta;
    match regime {
        // F = −π²/(720L³) + (π²/720)(9α/32m) L⁻⁴
        Regime::LowT => {
            let c = 9.0 * alpha / (32.0 * m);
            -(3.0 * PI * PI / (720.0 * l.powi(4)) - 4.0 * PI * PI * c / (720.0 * l.powi(5)))
        }
        // F = −(π²T⁴/45)(L − 3α/32m) + ζ(3)T³/2π − (ζ(3)T/8π)(L⁻² − (3α/16m)L⁻³)
        Regime::HighT | Regime::Crossover => {
            let bulk = if subtract_bulk { 0.0 } else { PI * PI * t.powi(4) / 45.0 };
            let plate = ZETA3 * t / (8.0 * PI) * (-2.0 / l.powi(3) + 3.0 * 3.0 * alpha / (16.0 * m * l.powi(4)));
            bulk + plate
        }
    }
}

/// Analytic `−∂/∂T` of the printed low- or high-temperature form.
pub fn closed_form_entropy(sys: &PlateSystem, regime: Regime) -> f64 {
    let PlateSystem {
        gap: l,
        beta,
        mass: m,
        alpha,
    } = *sys;
    let t = 1.0 / beta;
    match regime {
        Regime::LowT => 0.0,
        Regime::HighT | Regime::Crossover => {
            4.0 * PI * PI * t.powi(3) / 45.0 * (l - 3.0 * alpha / (32.0 * m)) - 3.0 * ZETA3 * t * t / (2.0 * PI)
                + ZETA3 / (8.0 * PI * l * l) * (1.0 - 3.0 * alpha / (16.0 * m * l))
        }
    }
}

/// Bulk blackbody contribution to the force, `−∂/∂L` of `−π²LT⁴/45`.
pub fn bulk_pressure(beta: f64) -> f64 {
    -blackbody(beta, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(gap: f64, beta: f64) -> PlateSystem {
        PlateSystem::new(gap, beta, 1e3, 0.0)
    }

    #[test]
    fn low_t_force() {
        let cfg = SumConfig::default();
        let dcfg = DerivativeConfig::default();
        let expected = -PI * PI / 240.0;
        for subtract_bulk in [false, true] {
            let d = DerivativeConfig { subtract_bulk, ..dcfg };
            let f = casimir_force(&free(1.0, 50.0), &cfg, &d, SignConvention::AsPrinted).unwrap();
            assert!(((f - expected) / expected).abs() < 1e-6);
        }
    }

    #[test]
    fn high_t_force_without_bulk() {
        let cfg = SumConfig::default();
        let dcfg = DerivativeConfig {
            subtract_bulk: true,
            ..DerivativeConfig::default()
        };
        let f = casimir_force(&free(1.0, 0.1), &cfg, &dcfg, SignConvention::AsPrinted).unwrap();
        let expected = -ZETA3 / (4.0 * PI * 0.1);
        assert!(((f - expected) / expected).abs() < 1e-6);
    }

    #[test]
    fn high_t_entropy() {
        let cfg = SumConfig::default();
        let s = entropy(&free(1.0, 0.1), &cfg, &DerivativeConfig::default(), SignConvention::AsPrinted).unwrap();
        let expected = closed_form_entropy(&free(1.0, 0.1), Regime::HighT);
        assert!((expected - 819.952_007_905_549).abs() < 1e-9);
        assert!(((s - expected) / expected).abs() < 1e-5);
    }

    #[test]
    fn closed_form_switch() {
        let cfg = SumConfig::default();
        let dcfg = DerivativeConfig {
            prefer_closed_form: true,
            ..DerivativeConfig::default()
        };
        let f = casimir_force(&free(1.0, 50.0), &cfg, &dcfg, SignConvention::AsPrinted).unwrap();
        assert_eq!(f, -PI * PI / 240.0);
    }

    #[test]
    fn step_validation() {
        let cfg = SumConfig::default();
        let dcfg = DerivativeConfig {
            step_rel: 0.5,
            ..DerivativeConfig::default()
        };
        assert!(casimir_force(&free(1.0, 1.0), &cfg, &dcfg, SignConvention::AsPrinted).is_err());
        let tiny = DerivativeConfig {
            step_rel: 1e-300,
            ..DerivativeConfig::default()
        };
        assert!(matches!(
            casimir_force(&free(1.0, 1.0), &cfg, &tiny, SignConvention::AsPrinted),
            Err(Error::StepCollapse(_))
        ));
    }
}
