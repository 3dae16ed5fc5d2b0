//! Sum over plate modes `Σ_m 1/(γ² + (mπ/L)²)` against `(L/γ) coth(γL)`.

use casimir_eft::modesum::resummation_identity;

fn main() {
    for gamma in [0.5, 1.0, 5.0] {
        for gap in [0.5, 1.0, 2.0] {
            for trunc in [10, 1_000, 10_000] {
                let r = resummation_identity(gamma, gap, trunc);
                println!("gamma={gamma:<4} L={gap:<4} trunc={trunc:<6} lhs={:.15e} rhs={:.15e} rel={:.1e}", r.lhs, r.rhs, r.residual);
            }
        }
    }
}
