//! The 3d theory of static modes, `T (f + F0_3d + F1_3d)`, against the 4d
//! high-temperature free energy.

use casimir_eft::dimred::{f0_3d, f0_3d_quadrature, f1_3d, f1_3d_kernel_path, match_high_t};
use casimir_eft::{EftCoefficients, PlateSystem, SignConvention, SumConfig};

fn main() {
    let cfg = SumConfig::default();
    let alpha = 1.0 / 137.036;
    for (beta, gap) in [(0.1, 1.0), (0.05, 2.0), (0.01, 3.0)] {
        let sys = PlateSystem::new(gap, beta, 1000.0, alpha);
        let c = EftCoefficients::leading_order(&sys).unwrap();
        let r = match_high_t(&sys, &cfg, SignConvention::AsPrinted).unwrap();
        println!(
            "beta={beta:<5} L={gap:<4} b1={:.4e} lhs={:.15e} rhs={:.15e} residual={:.1e}",
            c.b1, r.lhs, r.rhs, r.residual
        );
    }

    let gap = 1.0;
    println!("F0_3d closed {:.15e} quadrature {:.15e}", f0_3d(gap), f0_3d_quadrature(gap));
    println!(
        "F1_3d closed {:.15e} kernel path {:.15e} (e1 = e2 = 1)",
        f1_3d(gap, 1.0, 1.0),
        f1_3d_kernel_path(gap, 1.0, 1.0).unwrap()
    );
}
