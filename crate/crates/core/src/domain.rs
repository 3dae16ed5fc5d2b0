//! Physical inputs, matching coefficients and regime classification.
//!
//! Natural units (ħ = c = k_B = 1) throughout: lengths and inverse
//! temperatures in the same length unit, masses in inverse length, free
//! energies per unit plate area in inverse length cubed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modesum::SumConfig;

/// The EFT needs `m·L` and `m·β` at least this large to be trusted.
pub const EFT_VALIDITY_THRESHOLD: f64 = 10.0;

/// Two parallel perfectly conducting plates in a heat bath.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlateSystem {
    /// Plate separation `L`.
    pub gap: f64,
    /// Inverse temperature `β`.
    pub beta: f64,
    /// Electron mass `m`.
    pub mass: f64,
    /// Fine-structure constant `α`.
    pub alpha: f64,
}

/// Non-fatal remarks produced by [`PlateSystem::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DomainWarning {
    /// `m·L` below the EFT threshold.
    MassGap { product: f64 },
    /// `m·β` below the EFT threshold.
    MassTemperature { product: f64 },
}

impl std::fmt::Display for DomainWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainWarning::MassGap { product } => write!(
                f,
                "m*L = {product} < {EFT_VALIDITY_THRESHOLD}: outside the effective theory's domain"
            ),
            DomainWarning::MassTemperature { product } => write!(
                f,
                "m*beta = {product} < {EFT_VALIDITY_THRESHOLD}: temperature not small compared to m"
            ),
        }
    }
}

impl PlateSystem {
    pub fn new(gap: f64, beta: f64, mass: f64, alpha: f64) -> Self {
        Self {
            gap,
            beta,
            mass,
            alpha,
        }
    }

    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }

    /// Reject unphysical inputs; report (but accept) points outside the
    /// region where the effective theory applies.
    pub fn validate(self) -> Result<(PlateSystem, Vec<DomainWarning>)> {
        positive("L", self.gap)?;
        positive("beta", self.beta)?;
        positive("m", self.mass)?;
        if !self.alpha.is_finite() || !(0.0..1.0).contains(&self.alpha) {
            return Err(Error::Validation {
                field: "alpha",
                reason: format!("{} not in [0, 1)", self.alpha),
            });
        }
        let mut warnings = Vec::new();
        let ml = self.mass * self.gap;
        if ml < EFT_VALIDITY_THRESHOLD {
            warnings.push(DomainWarning::MassGap { product: ml });
        }
        let mb = self.mass * self.beta;
        if mb < EFT_VALIDITY_THRESHOLD {
            warnings.push(DomainWarning::MassTemperature { product: mb });
        }
        Ok((self, warnings))
    }

    pub fn b1(&self) -> Result<f64> {
        b1_coefficient(self.alpha, self.mass, self.gap)
    }
}

fn positive(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Validation {
            field,
            reason: format!("{value} must be finite and > 0"),
        })
    }
}

/// b₁ = 3α / (32 m L), the coefficient of (n·F)² fixed by matching.
pub fn b1_coefficient(alpha: f64, mass: f64, gap: f64) -> Result<f64> {
    positive("m", mass)?;
    positive("L", gap)?;
    Ok(3.0 * alpha / (32.0 * mass * gap))
}

/// Matching coefficients of the 4d and 3d effective theories.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EftCoefficients {
    pub b1: f64,
    pub e1: f64,
    pub e2: f64,
    /// Unit-operator coefficient of the 3d theory (3d normalization).
    pub f_unit: f64,
    /// Surface-term coefficient of the alternative bulk+surface Lagrangian.
    pub d1: Option<f64>,
}

impl EftCoefficients {
    /// Leading-order matching: e₁ = e₂ = b₁, d₁ = −3α/32.
    pub fn leading_order(sys: &PlateSystem) -> Result<Self> {
        let b1 = sys.b1()?;
        Ok(Self {
            b1,
            e1: b1,
            e2: b1,
            f_unit: crate::dimred::unit_operator_f(sys.beta, sys.gap, b1),
            d1: Some(-3.0 * sys.alpha / 32.0),
        })
    }

    /// Replace the 3d couplings, for tests of the matching.
    pub fn with_3d_couplings(mut self, e1: f64, e2: f64) -> Self {
        self.e1 = e1;
        self.e2 = e2;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    LowT,
    HighT,
    Crossover,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::LowT => "low_t",
            Regime::HighT => "high_t",
            Regime::Crossover => "crossover",
        }
    }
}

/// LowT iff β/L ≥ r_low, HighT iff L/β ≥ r_high.
pub fn classify_regime(sys: &PlateSystem, cfg: &SumConfig) -> Regime {
    classify(sys.beta, sys.gap, cfg)
}

pub(crate) fn classify(beta: f64, gap: f64, cfg: &SumConfig) -> Regime {
    if beta / gap >= cfg.r_low {
        Regime::LowT
    } else if gap / beta >= cfg.r_high {
        Regime::HighT
    } else {
        Regime::Crossover
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALPHA: f64 = 1.0 / 137.036;

    #[test]
    fn b1_values() {
        assert_eq!(b1_coefficient(0.0, 100.0, 1.0).unwrap(), 0.0);
        let a = b1_coefficient(ALPHA, 1000.0, 1.0).unwrap();
        assert!((a - 6.841_267_987_973_962e-7).abs() < 1e-20);
        let b = b1_coefficient(0.0072974, 10.0, 100.0).unwrap();
        assert!((b - 6.841_312_5e-7).abs() < 1e-20);
        assert!(b1_coefficient(ALPHA, 0.0, 1.0).is_err());
        assert!(b1_coefficient(ALPHA, 1.0, -1.0).is_err());
    }

    #[test]
    fn regimes() {
        let cfg = SumConfig::default();
        assert_eq!(classify_regime(&PlateSystem::new(1.0, 20.0, 1e3, 0.0), &cfg), Regime::LowT);
        assert_eq!(classify_regime(&PlateSystem::new(1.0, 0.1, 1e3, 0.0), &cfg), Regime::HighT);
        assert_eq!(classify_regime(&PlateSystem::new(1.0, 1.0, 1e3, 0.0), &cfg), Regime::Crossover);
    }

    #[test]
    fn validation() {
        let (_, w) = PlateSystem::new(1.0, 1.0, 1000.0, 0.007297).validate().unwrap();
        assert!(w.is_empty());

        let err = PlateSystem::new(-1.0, 1.0, 1000.0, 0.007297).validate().unwrap_err();
        assert!(matches!(err, Error::Validation { field: "L", .. }));
        assert!(PlateSystem::new(1.0, 0.0, 1000.0, 0.0).validate().is_err());
        assert!(PlateSystem::new(1.0, 1.0, 1000.0, 1.5).validate().is_err());

        let (_, w) = PlateSystem::new(1.0, 1.0, 2.0, 0.007297).validate().unwrap();
        assert!(w.iter().any(|w| matches!(w, DomainWarning::MassGap { .. })));
    }

    #[test]
    fn leading_order_couplings_are_b1() {
        let sys = PlateSystem::new(0.7, 0.05, 321.0, ALPHA);
        let c = EftCoefficients::leading_order(&sys).unwrap();
        assert_eq!(c.e1.to_bits(), c.b1.to_bits());
        assert_eq!(c.e2.to_bits(), c.b1.to_bits());
        assert_eq!(c.d1, Some(-3.0 * ALPHA / 32.0));
    }
}
