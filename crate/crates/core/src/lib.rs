//! Casimir free energy between two perfectly conducting plates at finite
//! temperature, including the order-α correction from the boundary
//! effective field theory, with the numerical checks that tie the mode
//! sums to their closed-form limits.
//!
//! Natural units throughout (ħ = c = k_B = 1). Free energies are per unit
//! plate area and carry dimension length⁻³.
//!
//! ```
//! use casimir_eft::{total_free_energy, PlateSystem, SignConvention, SumConfig};
//!
//! let sys = PlateSystem::new(1.0, 20.0, 1000.0, 1.0 / 137.036);
//! let f = total_free_energy(&sys, &SumConfig::default(), SignConvention::AsPrinted).unwrap();
//! assert!((f.total + 0.013_707_755_8).abs() < 1e-8);
//! ```

pub mod audit;
pub mod cli;
pub mod dimred;
pub mod domain;
pub mod eft;
pub mod error;
pub mod freefield;
pub mod modesum;
pub mod propagator;
pub mod quad;
pub mod specfun;
pub mod thermo;

pub use audit::{run_identity_suite, AuditReport, ConsistencyReport, GridPoint, IdentityId};
pub use dimred::{match_high_t, MatchReport};
pub use domain::{classify_regime, EftCoefficients, PlateSystem, Regime};
pub use eft::{total_free_energy, SignConvention};
pub use error::{Error, Result};
pub use freefield::{free_energy_f0, FreeEnergyResult};
pub use modesum::{inter_sum, SumConfig, SumValue};
pub use thermo::{casimir_force, entropy, DerivativeConfig, Scheme};
