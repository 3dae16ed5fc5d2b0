//! Numerical ledger of the identities relating the mode sums, the closed
//! forms and the dimensionally reduced theory.
//!
//! Every identity is evaluated on a parameter grid and compared against a
//! fixed tolerance. Identities that depend on the sign of the bulk
//! correction are evaluated once per [`SignConvention`]; failures are
//! reported, never patched.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimred::{f1_3d, f1_3d_kernel_path, match_high_t};
use crate::domain::PlateSystem;
use crate::eft::{self, SignConvention};
use crate::error::Result;
use crate::freefield::{casimir_low_t_free, free_energy_f0, free_high_t_closed};
use crate::modesum::{resummation_identity, SumConfig};
use crate::propagator::{image_sign_verdict, integrated_coincident_kernel, SignVerdict};
use crate::specfun::zeta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    /// Σ_m 1/(γ² + k_m²) against its closed form.
    I1,
    /// Low-temperature order-α total: F₁⁽ᵃ⁾ + F₁⁽ᵇ⁾ → b₁π²/(240L³).
    I2,
    /// Plate piece F₁⁽ᵇ⁾ against its low-/high-temperature closed form.
    I3,
    /// High-temperature order-α total against the printed α-terms.
    I4,
    /// 3d effective theory reproduces the 4d high-temperature form.
    I5,
    /// Coincident plate kernel: closed form against z- and γ-quadrature.
    I6,
    /// One-loop free energy against its low-/high-temperature forms.
    I7,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::I1,
        IdentityId::I2,
        IdentityId::I3,
        IdentityId::I4,
        IdentityId::I5,
        IdentityId::I6,
        IdentityId::I7,
    ];

    pub fn depends_on_convention(&self) -> bool {
        matches!(self, IdentityId::I2 | IdentityId::I4)
    }
}

/// Base tolerance per identity. How it scales into an absolute threshold is
/// fixed per identity (relative to the right-hand side, or to `b₁/L³`, or
/// to `1/L³`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuditTolerances {
    pub i1: f64,
    pub i2: f64,
    pub i3_low: f64,
    pub i3_high: f64,
    pub i4: f64,
    pub i5: f64,
    pub i6: f64,
    pub i7_low: f64,
    pub i7_high: f64,
}

impl Default for AuditTolerances {
    fn default() -> Self {
        Self {
            i1: 1e-8,
            i2: 1e-8,
            i3_low: 1e-6,
            i3_high: 1e-12,
            i4: 1e-10,
            i5: 1e-12,
            i6: 1e-10,
            i7_low: 1e-7,
            i7_high: 1e-10,
        }
    }
}

impl AuditTolerances {
    pub fn uniform(tol: f64) -> Self {
        Self {
            i1: tol,
            i2: tol,
            i3_low: tol,
            i3_high: tol,
            i4: tol,
            i5: tol,
            i6: tol,
            i7_low: tol,
            i7_high: tol,
        }
    }
}

/// Where each limiting identity is considered applicable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuditThresholds {
    /// β/L at or above which low-temperature identities are checked.
    pub low_t_ratio: f64,
    /// β/L at or above which the plate-piece low-T closed form is checked.
    pub low_t_closed_ratio: f64,
    /// L/β at or above which high-temperature identities are checked.
    pub high_t_ratio: f64,
}

impl Default for AuditThresholds {
    fn default() -> Self {
        Self {
            low_t_ratio: 8.0,
            low_t_closed_ratio: 20.0,
            high_t_ratio: 8.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub beta: f64,
    #[serde(rename = "L")]
    pub gap: f64,
    pub m: f64,
    pub alpha: f64,
}

impl GridPoint {
    pub fn system(&self) -> PlateSystem {
        PlateSystem::new(self.gap, self.beta, self.m, self.alpha)
    }
}

/// Gaps {1, 2}; β/L ∈ {8, 20, 50}, β/L = 1 and L/β ∈ {8, 10, 20};
/// m = 1000, α = 1/137.036.
pub fn default_grid() -> Vec<GridPoint> {
    let ratios = [50.0, 20.0, 8.0, 1.0, 1.0 / 8.0, 1.0 / 10.0, 1.0 / 20.0];
    let mut grid = Vec::new();
    for gap in [1.0, 2.0] {
        for r in ratios {
            grid.push(GridPoint {
                beta: r * gap,
                gap,
                m: 1000.0,
                alpha: 1.0 / 137.036,
            });
        }
    }
    grid
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub identity_id: IdentityId,
    /// What exactly was compared.
    pub check: &'static str,
    pub grid_point: GridPoint,
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs − rhs|`.
    pub residual: f64,
    /// Absolute threshold; `pass ⇔ residual <= tolerance`.
    pub tolerance: f64,
    /// `None` when the identity does not involve the bulk sign.
    pub convention: Option<SignConvention>,
    pub pass: bool,
    /// Engine failure at this point, if any.
    pub error: Option<String>,
}

impl ConsistencyReport {
    fn new(
        identity_id: IdentityId,
        check: &'static str,
        grid_point: GridPoint,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        convention: Option<SignConvention>,
    ) -> Self {
        let residual = (lhs - rhs).abs();
        Self {
            identity_id,
            check,
            grid_point,
            lhs,
            rhs,
            residual,
            tolerance,
            convention,
            pass: residual <= tolerance,
            error: None,
        }
    }

    fn failed(identity_id: IdentityId, check: &'static str, grid_point: GridPoint, err: String) -> Self {
        Self {
            identity_id,
            check,
            grid_point,
            lhs: f64::NAN,
            rhs: f64::NAN,
            residual: f64::INFINITY,
            tolerance: 0.0,
            convention: None,
            pass: false,
            error: Some(err),
        }
    }
}

/// Sign of the bulk piece from an independent zeta-regularized evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaOracleVerdict {
    pub beta: f64,
    #[serde(rename = "L")]
    pub gap: f64,
    /// `F₁⁽ᵃ⁾/b₁` from the oracle.
    pub value: f64,
    /// Convention whose `F₁⁽ᵃ⁾` has the oracle's sign.
    pub agrees_with: SignConvention,
}

/// `F₁⁽ᵃ⁾/b₁ = −d·L·T Σ_n ∫ d³k/(2π)³ k₃²/K²`, evaluated without the
/// Gamma-function closed form: rotational symmetry gives `k₃² → k²/3`, the
/// scaleless part drops, `∫ d³k/(2π)³ 1/(k² + ω²) = −|ω|/(4π)`, and
/// `Σ_n |n|³` is assigned `2ζ(−3)`.
pub fn zeta_reg_f1a_oracle(beta: f64, gap: f64) -> Result<f64> {
    let t = 1.0 / beta;
    let d = 2.0;
    // T Σ_n |ω_n|³ with ω_n = 2πnT
    let matsubara = t * (2.0 * PI * t).powi(3) * 2.0 * zeta(-3.0)?;
    let sum_integral = matsubara / (12.0 * PI);
    Ok(-d * gap * sum_integral)
}

pub fn zeta_oracle_verdict(beta: f64, gap: f64) -> Result<ZetaOracleVerdict> {
    let value = zeta_reg_f1a_oracle(beta, gap)?;
    let printed = eft::f1a(beta, gap, 1.0, SignConvention::AsPrinted);
    Ok(ZetaOracleVerdict {
        beta,
        gap,
        value,
        agrees_with: if value.signum() == printed.signum() {
            SignConvention::AsPrinted
        } else {
            SignConvention::Reconciled
        },
    })
}

/// `∫₀ᴸ dz ⟨Ā₀ ∂_z² Ā₀⟩` per transverse mode by z-quadrature of the printed
/// kernel, with the `z`-independent `−½` restored.
pub fn coincident_kernel_quadrature(gamma: f64, gap: f64) -> f64 {
    let q = crate::quad::integrate(
        |z| crate::propagator::coincident_density(gamma, gap, z),
        0.0,
        gap,
        1e-15,
        1e-14,
    );
    q.value + 0.5
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub reports: Vec<ConsistencyReport>,
    /// Conventions under which every I2 and I4 entry passes.
    pub conventions_passing_i2_i4: Vec<SignConvention>,
    /// The convention the report is judged under: the first passing one
    /// (the default convention when both pass), `None` when neither does.
    pub reconciling_convention: Option<SignConvention>,
    pub zeta_oracle: ZetaOracleVerdict,
    pub image_sign: SignVerdict,
}

impl AuditReport {
    /// All convention-independent entries pass, and the convention-dependent
    /// ones pass under the reconciling convention.
    pub fn all_pass(&self) -> bool {
        let Some(conv) = self.reconciling_convention else {
            return false;
        };
        self.reports
            .iter()
            .filter(|r| r.convention.is_none() || r.convention == Some(conv))
            .all(|r| r.pass)
    }

    pub fn max_residual(&self, id: IdentityId, conv: Option<SignConvention>) -> f64 {
        self.reports
            .iter()
            .filter(|r| r.identity_id == id && r.convention == conv)
            .map(|r| r.residual)
            .fold(0.0, f64::max)
    }
}

fn point_reports(
    p: &GridPoint,
    cfg: &SumConfig,
    tol: &AuditTolerances,
    th: &AuditThresholds,
) -> Vec<ConsistencyReport> {
    let mut out = Vec::new();
    let sys = p.system();
    let (beta, gap) = (p.beta, p.gap);
    let low = beta / gap;
    let high = gap / beta;

    let b1 = match sys.b1() {
        Ok(b) => b,
        Err(e) => {
            out.push(ConsistencyReport::failed(IdentityId::I1, "b1", *p, e.to_string()));
            return out;
        }
    };

    let gamma = 1.0 / gap;
    let r = resummation_identity(gamma, gap, 10_000);
    out.push(ConsistencyReport::new(
        IdentityId::I1,
        "sum_m 1/(gamma^2+k_m^2) at gamma=1/L vs (2L/gamma)[1/2+1/(e^(2 gamma L)-1)]",
        *p,
        r.lhs,
        r.rhs,
        tol.i1 * r.rhs.abs(),
        None,
    ));

    let f1b = match eft::f1b(beta, gap, b1, cfg) {
        Ok(v) => v.value,
        Err(e) => {
            out.push(ConsistencyReport::failed(IdentityId::I3, "F1b engine", *p, e.to_string()));
            f64::NAN
        }
    };

    if low >= th.low_t_ratio && f1b.is_finite() {
        let rhs = eft::two_loop_low_t_alpha_part(gap, b1);
        for conv in SignConvention::ALL {
            out.push(ConsistencyReport::new(
                IdentityId::I2,
                "F1a + F1b vs b1 pi^2/(240 L^3)",
                *p,
                eft::f1a(beta, gap, b1, conv) + f1b,
                rhs,
                tol.i2 * b1 / gap.powi(3),
                Some(conv),
            ));
        }
    }

    if low >= th.low_t_closed_ratio && f1b.is_finite() {
        let rhs = eft::f1b_low_t_closed(beta, gap, b1);
        out.push(ConsistencyReport::new(
            IdentityId::I3,
            "F1b vs b1[pi^2/(240L^3) + pi^2 L/(45 beta^4)]",
            *p,
            f1b,
            rhs,
            tol.i3_low * rhs.abs(),
            None,
        ));
    }

    if high >= th.high_t_ratio && f1b.is_finite() {
        let rhs = eft::f1b_high_t_closed(beta, gap, b1);
        out.push(ConsistencyReport::new(
            IdentityId::I3,
            "F1b vs b1 zeta(3)/(4 pi beta L^2)",
            *p,
            f1b,
            rhs,
            tol.i3_high * rhs.abs(),
            None,
        ));

        let rhs = eft::two_loop_high_t_alpha_part(beta, gap, b1);
        for conv in SignConvention::ALL {
            out.push(ConsistencyReport::new(
                IdentityId::I4,
                "F1a + F1b vs alpha-terms of the high-T form",
                *p,
                eft::f1a(beta, gap, b1, conv) + f1b,
                rhs,
                tol.i4 * rhs.abs(),
                Some(conv),
            ));
        }

        match match_high_t(&sys, cfg, SignConvention::AsPrinted) {
            Ok(m) => out.push(ConsistencyReport::new(
                IdentityId::I5,
                "T(f + F0_3d + F1_3d) vs high-T form",
                *p,
                m.lhs,
                m.rhs,
                tol.i5 * m.rhs.abs(),
                None,
            )),
            Err(e) => out.push(ConsistencyReport::failed(IdentityId::I5, "match", *p, e.to_string())),
        }
    }

    out.push(ConsistencyReport::new(
        IdentityId::I6,
        "L gamma/(e^(2 gamma L)-1) at gamma=1/L vs z-quadrature of the kernel",
        *p,
        integrated_coincident_kernel(gamma, gap),
        coincident_kernel_quadrature(gamma, gap),
        tol.i6,
        None,
    ));
    match f1_3d_kernel_path(gap, 1.0, 1.0) {
        Ok(k) => out.push(ConsistencyReport::new(
            IdentityId::I6,
            "(e1+e2) zeta(3)/(8 pi L^2) at e1=e2=1 vs gamma-quadrature of kernels",
            *p,
            f1_3d(gap, 1.0, 1.0),
            k,
            tol.i6,
            None,
        )),
        Err(e) => out.push(ConsistencyReport::failed(IdentityId::I6, "kernel path", *p, e.to_string())),
    }

    if low >= th.low_t_ratio || high >= th.high_t_ratio {
        match free_energy_f0(beta, gap, cfg) {
            Ok(f0) if low >= th.low_t_ratio => out.push(ConsistencyReport::new(
                IdentityId::I7,
                "F0 vs -pi^2/(720 L^3)",
                *p,
                f0.total,
                casimir_low_t_free(gap),
                tol.i7_low / gap.powi(3),
                None,
            )),
            Ok(f0) => {
                let rhs = free_high_t_closed(beta, gap);
                out.push(ConsistencyReport::new(
                    IdentityId::I7,
                    "F0 vs high-T form at alpha=0",
                    *p,
                    f0.total,
                    rhs,
                    tol.i7_high * rhs.abs(),
                    None,
                ))
            }
            Err(e) => out.push(ConsistencyReport::failed(IdentityId::I7, "F0 engine", *p, e.to_string())),
        }
    }
    out
}

/// Evaluate every identity on `grid`. Points are processed in parallel and
/// reassembled in grid order, so the output is deterministic.
pub fn run_identity_suite(
    grid: &[GridPoint],
    cfg: &SumConfig,
    tol: &AuditTolerances,
    th: &AuditThresholds,
) -> Result<AuditReport> {
    if grid.is_empty() {
        return Err(crate::error::Error::Validation {
            field: "grid",
            reason: "empty".into(),
        });
    }
    cfg.validate()?;
    let reports: Vec<ConsistencyReport> = grid
        .par_iter()
        .map(|p| point_reports(p, cfg, tol, th))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let conventions_passing_i2_i4: Vec<SignConvention> = SignConvention::ALL
        .into_iter()
        .filter(|conv| {
            reports
                .iter()
                .filter(|r| r.identity_id.depends_on_convention() && r.convention == Some(*conv))
                .all(|r| r.pass)
        })
        .collect();
    let reconciling_convention = conventions_passing_i2_i4.first().copied();
    Ok(AuditReport {
        reports,
        conventions_passing_i2_i4,
        reconciling_convention,
        zeta_oracle: zeta_oracle_verdict(1.0, 1.0)?,
        image_sign: image_sign_verdict(1.0, 1.0, 1e-6),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_magnitude_and_scaling() {
        let v = zeta_reg_f1a_oracle(1.0, 1.0).unwrap();
        assert!((v.abs() - PI * PI / 45.0).abs() < 1e-14);
        let a = zeta_reg_f1a_oracle(2.0, 3.0).unwrap();
        assert!((a / v - 3.0 / 16.0).abs() < 1e-14);
    }

    #[test]
    fn kernel_quadrature_matches_closed_form() {
        for gl in [0.1, 1.0, 5.0, 20.0] {
            let q = coincident_kernel_quadrature(gl, 1.0);
            assert!((q - integrated_coincident_kernel(gl, 1.0)).abs() < 1e-10, "{gl}");
        }
    }

    #[test]
    fn empty_grid_rejected() {
        let r = run_identity_suite(&[], &SumConfig::default(), &AuditTolerances::default(), &AuditThresholds::default());
        assert!(r.is_err());
    }

    #[test]
    fn free_theory_order_alpha_identities_trivial() {
        let grid: Vec<GridPoint> = default_grid()
            .into_iter()
            .map(|p| GridPoint { alpha: 0.0, ..p })
            .collect();
        let report = run_identity_suite(
            &grid,
            &SumConfig::default(),
            &AuditTolerances::default(),
            &AuditThresholds::default(),
        )
        .unwrap();
        for r in report.reports.iter().filter(|r| r.identity_id.depends_on_convention()) {
            assert_eq!(r.lhs, 0.0);
            assert_eq!(r.rhs, 0.0);
            assert!(r.pass);
        }
        assert!(report.reports.iter().all(|r| r.pass));
        // both conventions pass vacuously
        assert_eq!(report.conventions_passing_i2_i4.len(), 2);
        assert!(report.all_pass());
    }
}
