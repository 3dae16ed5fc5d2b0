//! Plate propagator kernels in the mixed (transverse momentum, z)
//! representation.
//!
//! For a transverse mode with energy `γ` the propagator between the plates
//! is the free part `e^{−γ|z−z′|}/(2γ)` plus an image part built from the
//! bracket
//!
//! ```text
//! e^{γL}(e^{−γ(|z|+|z′|)} + e^{−γ(|z−L|+|z′−L|)}) ± (e^{−γ(|z|+|z′−L|)} + e^{−γ(|z−L|+|z′|)})
//! ```
//!
//! With the minus sign (the printed form, [`boundary_kernel`]) and an
//! overall `−1/(4γ sinh γL)` the result vanishes on both plates
//! (Dirichlet). The scalar `A₀` channel needs `∂_z D = 0` on the plates,
//! which selects the plus sign inside the bracket and `+1/(4γ sinh γL)`
//! outside; [`neumann_check`] verifies that choice numerically.

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative sign between the two image groups of the bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ImageSign {
    /// `e^{γL}(…) − (…)`, as printed; vanishes on the plates.
    Dirichlet,
    /// `e^{γL}(…) + (…)`; zero normal derivative on the plates.
    Neumann,
}

impl ImageSign {
    fn factor(self) -> f64 {
        match self {
            ImageSign::Dirichlet => -1.0,
            ImageSign::Neumann => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateKernelInput {
    pub gamma: f64,
    pub gap: f64,
    pub z: f64,
    pub zprime: f64,
}

impl PlateKernelInput {
    pub fn new(gamma: f64, gap: f64, z: f64, zprime: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::Validation {
                field: "gamma",
                reason: format!("{gamma} must be > 0"),
            });
        }
        if !(gap > 0.0 && gap.is_finite()) {
            return Err(Error::Validation {
                field: "L",
                reason: format!("{gap} must be > 0"),
            });
        }
        for (field, v) in [("z", z), ("zprime", zprime)] {
            if !(0.0..=gap).contains(&v) {
                return Err(Error::Validation {
                    field,
                    reason: format!("{v} not in [0, {gap}]"),
                });
            }
        }
        Ok(Self {
            gamma,
            gap,
            z,
            zprime,
        })
    }
}

/// The printed bracket `B(γ, L, z, z′)` (Dirichlet sign).
///
/// Grows like `e^{γL}`; overflows to infinity past `γL ≈ 709`. Use
/// [`normalized_kernel`] for the combination that enters the propagator.
pub fn boundary_kernel(inp: &PlateKernelInput) -> f64 {
    bracket(inp, ImageSign::Dirichlet)
}

pub fn bracket(inp: &PlateKernelInput, sign: ImageSign) -> f64 {
    let PlateKernelInput {
        gamma: g,
        gap: l,
        z,
        zprime: zp,
    } = *inp;
    let direct = (g * (l - z - zp)).exp() + (-g * (l - z - zp)).exp();
    let crossed = (-g * (l + z - zp)).exp() + (-g * (l - z + zp)).exp();
    direct + sign.factor() * crossed
}

/// `bracket / (2 sinh γL)` with every exponent non-positive, so it stays
/// finite for any `γL`.
pub fn normalized_kernel(inp: &PlateKernelInput, sign: ImageSign) -> f64 {
    let PlateKernelInput {
        gamma: g,
        gap: l,
        z,
        zprime: zp,
    } = *inp;
    let num = (-g * (z + zp)).exp() + (-g * (2.0 * l - z - zp)).exp()
        + sign.factor() * ((-g * (2.0 * l + z - zp)).exp() + (-g * (2.0 * l - z + zp)).exp());
    num / (-(-2.0 * g * l).exp_m1())
}

/// Full mixed-representation propagator `D(z, z′)` for one transverse mode.
pub fn plate_propagator(inp: &PlateKernelInput, sign: ImageSign) -> f64 {
    let free = (-inp.gamma * (inp.z - inp.zprime).abs()).exp();
    // the image part carries the same sign as the bracket
    (free + sign.factor() * normalized_kernel(inp, sign)) / (2.0 * inp.gamma)
}

/// `L γ/(e^{2γL} − 1)`: the `L`-dependent part of `∫₀ᴸ dz ⟨Ā₀ ∂_z² Ā₀⟩` per
/// transverse mode, after dropping the `z`-independent constant that
/// dimensional regularization removes.
pub fn integrated_coincident_kernel(gamma: f64, gap: f64) -> f64 {
    let x = 2.0 * gamma * gap;
    if x > 1400.0 {
        return 0.0;
    }
    gap * gamma / x.exp_m1()
}

/// The gauge-field block, `(1 − d)` times the scalar block. Only `d = 2`.
pub fn gauge_kernel_value(gamma: f64, gap: f64, d: u32) -> Result<f64> {
    if d != 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    Ok((1.0 - d as f64) * integrated_coincident_kernel(gamma, gap))
}

/// Coincident-point integrand of `⟨Ā₀ ∂_z² Ā₀⟩` for the printed kernel:
/// `−γ²/(4γ sinh γL) · B(γ, L, z, z)`.
pub fn coincident_density(gamma: f64, gap: f64, z: f64) -> f64 {
    let inp = PlateKernelInput {
        gamma,
        gap,
        z,
        zprime: z,
    };
    -0.5 * gamma * normalized_kernel(&inp, ImageSign::Dirichlet)
}

/// One-sided finite-difference estimate of `|∂_z D| / |D|` at the plate,
/// source at `z′ = L/3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryResidual {
    pub at_lower_plate: f64,
    pub at_upper_plate: f64,
}

pub fn boundary_derivative_residual(gamma: f64, gap: f64, eps: f64, sign: ImageSign) -> BoundaryResidual {
    let zp = gap / 3.0;
    let d = |z: f64| {
        plate_propagator(
            &PlateKernelInput {
                gamma,
                gap,
                z,
                zprime: zp,
            },
            sign,
        )
    };
    let lower = ((d(2.0 * eps) - d(eps)) / eps).abs() / d(eps).abs();
    let upper = ((d(gap - eps) - d(gap - 2.0 * eps)) / eps).abs() / d(gap - eps).abs();
    BoundaryResidual {
        at_lower_plate: lower,
        at_upper_plate: upper,
    }
}

/// Neumann condition `∂_z D = 0` checked at `z = eps` (forward difference)
/// for the scalar channel. The residual is `O(eps)`.
pub fn neumann_check(gamma: f64, gap: f64, eps: f64) -> f64 {
    boundary_derivative_residual(gamma, gap, eps, ImageSign::Neumann).at_lower_plate
}

/// Which bracket sign satisfies the scalar boundary condition, together with
/// both residuals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignVerdict {
    pub neumann_residual_plus: f64,
    pub neumann_residual_minus: f64,
    pub dirichlet_value_minus: f64,
    pub scalar_channel: ImageSign,
}

pub fn image_sign_verdict(gamma: f64, gap: f64, eps: f64) -> SignVerdict {
    let plus = neumann_check(gamma, gap, eps);
    let minus = boundary_derivative_residual(gamma, gap, eps, ImageSign::Dirichlet).at_lower_plate;
    let at_plate = plate_propagator(
        &PlateKernelInput {
            gamma,
            gap,
            z: 0.0,
            zprime: gap / 3.0,
        },
        ImageSign::Dirichlet,
    );
    SignVerdict {
        neumann_residual_plus: plus,
        neumann_residual_minus: minus,
        dirichlet_value_minus: at_plate,
        scalar_channel: if plus < minus {
            ImageSign::Neumann
        } else {
            ImageSign::Dirichlet
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_midpoint_value() {
        let inp = PlateKernelInput::new(1.0, 1.0, 0.5, 0.5).unwrap();
        let expected = 2.0 - 2.0 * (-1f64).exp();
        assert!((boundary_kernel(&inp) - expected).abs() < 1e-15);
        assert!((boundary_kernel(&inp) - 1.264_241_1).abs() < 1e-7);
    }

    #[test]
    fn normalized_matches_raw() {
        let inp = PlateKernelInput::new(1.3, 0.8, 0.1, 0.6).unwrap();
        for sign in [ImageSign::Dirichlet, ImageSign::Neumann] {
            let raw = bracket(&inp, sign) / (2.0 * (1.3f64 * 0.8).sinh());
            assert!((normalized_kernel(&inp, sign) - raw).abs() < 1e-14);
        }
    }

    #[test]
    fn large_gamma_is_finite() {
        let inp = PlateKernelInput::new(1000.0, 1.0, 0.0, 0.0).unwrap();
        assert!(normalized_kernel(&inp, ImageSign::Dirichlet).is_finite());
        assert_eq!(integrated_coincident_kernel(40.0, 1.0), 40.0 * (-80f64).exp() / (1.0 - (-80f64).exp()));
        assert_eq!(integrated_coincident_kernel(1e4, 1.0), 0.0);
    }

    #[test]
    fn coincident_kernel_values() {
        let v = integrated_coincident_kernel(1.0, 1.0);
        assert!((v - 1.0 / (2f64.exp() - 1.0)).abs() < 1e-16);
        assert!((v - 0.156_517_64).abs() < 1e-8);
        let g = gauge_kernel_value(1.0, 1.0, 2).unwrap();
        assert_eq!(g + v, 0.0);
        assert!(matches!(gauge_kernel_value(1.0, 1.0, 3), Err(Error::UnsupportedDimension(3))));
    }

    #[test]
    fn input_validation() {
        assert!(PlateKernelInput::new(0.0, 1.0, 0.0, 0.0).is_err());
        assert!(PlateKernelInput::new(1.0, 1.0, 1.5, 0.0).is_err());
    }

    #[test]
    fn neumann_residual_small_and_linear() {
        let r6 = neumann_check(1.0, 1.0, 1e-6);
        assert!(r6 < 1e-4);
        let r4 = neumann_check(1.0, 1.0, 1e-4);
        let r5 = neumann_check(1.0, 1.0, 1e-5);
        let order = (r4 / r5).log10();
        assert!((order - 1.0).abs() < 0.05, "order {order}");
        let upper = boundary_derivative_residual(1.0, 1.0, 1e-6, ImageSign::Neumann).at_upper_plate;
        assert!(upper < 1e-4);
    }

    #[test]
    fn printed_sign_is_dirichlet() {
        let v = image_sign_verdict(1.0, 1.0, 1e-6);
        assert_eq!(v.scalar_channel, ImageSign::Neumann);
        assert!(v.neumann_residual_minus > 0.1);
        assert!(v.dirichlet_value_minus.abs() < 1e-15);
    }
}
