//! The image-resummed Matsubara engine next to the direct double sum, with
//! the engine's error bound and term count.

use std::time::Instant;

use casimir_eft::modesum::{inter_sum, inter_sum_bruteforce, SumConfig};

fn main() {
    let cfg = SumConfig::default();
    let gap = 1.0;
    for ratio in [0.1, 0.5, 1.0, 5.0, 20.0] {
        let beta = ratio * gap;
        let t0 = Instant::now();
        let e = inter_sum(beta, gap, &cfg).unwrap();
        let te = t0.elapsed();
        let t0 = Instant::now();
        let o = inter_sum_bruteforce(beta, gap, &cfg).unwrap();
        let to = t0.elapsed();
        println!(
            "beta/L={ratio:<5} S={:.15e} bound={:.1e} images={:<3} | brute={:.15e} terms={:<7} rel={:.1e} | {:?} vs {:?}",
            e.value,
            e.error_bound,
            e.terms_used,
            o.value,
            o.terms_used,
            ((e.value - o.value) / o.value).abs(),
            te,
            to
        );
    }
}
