//! Below the crossover the blackbody term, the plate constant and the
//! boundary sum cancel down to the temperature-independent Casimir energy.

use casimir_eft::freefield::{casimir_low_t_free, free_energy_f0};
use casimir_eft::SumConfig;

fn main() {
    let cfg = SumConfig::default();
    let gap = 1.0;
    println!("{:>8} {:>14} {:>14} {:>14} {:>22} {:>10}", "beta/L", "blackbody", "plate", "boundary", "F0", "L^3|dF|");
    for ratio in [2.0, 4.0, 8.0, 12.0, 20.0, 50.0] {
        let r = free_energy_f0(ratio * gap, gap, &cfg).expect("free energy");
        let gap_err = (r.total - casimir_low_t_free(gap)).abs() * gap.powi(3);
        println!(
            "{ratio:>8} {:>14.6e} {:>14.6e} {:>14.6e} {:>22.15e} {gap_err:>10.2e}",
            r.parts.blackbody, r.parts.plate_constant, r.parts.boundary_sum, r.total
        );
    }
    println!("-pi^2/(720 L^3) = {:.15e}", casimir_low_t_free(gap));
}
