use std::f64::consts::PI;

use casimir_eft::freefield::{boundary_log_sum, boundary_log_sum_bruteforce, free_energy_f0};
use casimir_eft::modesum::{inter_sum, inter_sum_bruteforce, plate_thermal_sum, SumConfig};
use casimir_eft::quad::integrate_to_infinity;
use casimir_eft::specfun::{zeta, ZETA3};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

// (beta, L, S, G) from 30-digit quadrature of the Matsubara sum
const FROZEN: [(f64, f64, f64, f64); 3] = [
    (1.0, 1.0, 0.047_854_001_350_708_06, -0.047_832_089_388_592_02),
    (0.5, 2.0, 0.011_957_081_125_974_073, -0.023_914_162_251_948_146),
    (3.0, 1.0, 0.021_873_261_518_985_371, -0.018_095_670_911_501_363),
];

#[test]
fn inter_sum_frozen_values() {
    let cfg = SumConfig::default();
    for (beta, gap, s, _) in FROZEN {
        let v = inter_sum(beta, gap, &cfg).unwrap();
        assert!(rel(v.value, s) < 1e-12, "beta={beta} L={gap}: {} vs {s}", v.value);
        assert!((v.value - s).abs() <= v.error_bound.max(1e-15 * s));
    }
}

#[test]
fn boundary_sum_frozen_values() {
    let cfg = SumConfig::default();
    for (beta, gap, _, g) in FROZEN {
        let v = boundary_log_sum(beta, gap, &cfg).unwrap();
        assert!(rel(v.value, g) < cfg.rel_tol, "beta={beta} L={gap}: {} vs {g}", v.value);
        assert!((v.value - g).abs() <= v.error_bound);
        let tight = boundary_log_sum(beta, gap, &cfg.tightened()).unwrap();
        assert!(rel(tight.value, g) < 1e-14, "beta={beta} L={gap}: {} vs {g}", tight.value);
    }
}

#[test]
fn inter_sum_against_bruteforce_grid() {
    let cfg = SumConfig::default();
    for gap in [0.3, 0.7, 1.0, 2.5, 4.0] {
        for ratio in [0.1, 0.4, 1.0, 3.0, 10.0] {
            let beta = ratio * gap;
            let e = inter_sum(beta, gap, &cfg).unwrap();
            let o = inter_sum_bruteforce(beta, gap, &cfg).unwrap();
            assert!(rel(e.value, o.value) < 1e-10, "beta={beta} L={gap}");
            assert!((e.value - o.value).abs() <= 2.0 * (e.error_bound + o.error_bound) + 1e-14 * o.value);
        }
    }
}

#[test]
fn boundary_sum_against_bruteforce_grid() {
    let cfg = SumConfig::default();
    for gap in [0.5, 1.0, 2.0] {
        for ratio in [0.1, 1.0, 10.0] {
            let beta = ratio * gap;
            let e = boundary_log_sum(beta, gap, &cfg).unwrap().value;
            let o = boundary_log_sum_bruteforce(beta, gap, &cfg).unwrap().value;
            assert!(rel(e, o) < 1e-10, "beta={beta} L={gap}");
        }
    }
}

/// `S` by per-Matsubara quadrature, `T Σ_n (1/2π)∫_{|ω_n|}^∞ γ²/(e^{2γL} − 1) dγ`.
fn inter_sum_quadrature(beta: f64, gap: f64) -> f64 {
    let t = 1.0 / beta;
    let term = |n: u32| {
        let w = 2.0 * PI * t * n as f64;
        integrate_to_infinity(|g| g * g / (2.0 * g * gap).exp_m1(), w, 1e-300, 1e-14).value
    };
    let mut total = term(0);
    for n in 1..10_000 {
        let v = term(n);
        total += 2.0 * v;
        if v < 1e-18 * total {
            break;
        }
    }
    t * total / (2.0 * PI)
}

#[test]
fn inter_sum_against_quadrature() {
    let cfg = SumConfig::default();
    for (beta, gap) in [(0.2, 1.0), (1.0, 1.0), (4.0, 1.0), (1.0, 3.0)] {
        let e = inter_sum(beta, gap, &cfg).unwrap().value;
        assert!(rel(e, inter_sum_quadrature(beta, gap)) < 1e-10, "beta={beta} L={gap}");
    }
}

/// `Σ_{m∈ℤ} ∫ d²k/(2π)² (k_m²/ω) n_B(βω)` as a radial quadrature per `m`.
fn plate_thermal_quadrature(beta: f64, gap: f64) -> f64 {
    let mut total = 0.0;
    for m in 1..2_000 {
        let km = PI * m as f64 / gap;
        // k dk = ω dω
        let v = integrate_to_infinity(|w| km * km / (beta * w).exp_m1(), km, 1e-300, 1e-13).value / (2.0 * PI);
        total += 2.0 * v;
        if v < 1e-18 * total {
            break;
        }
    }
    total
}

#[test]
fn plate_thermal_sum_against_quadrature() {
    let cfg = SumConfig::default();
    for (beta, gap) in [(0.5, 1.0), (1.0, 1.0), (2.0, 1.0), (1.0, 0.5)] {
        let e = plate_thermal_sum(beta, gap, &cfg).unwrap().value;
        let q = plate_thermal_quadrature(beta, gap);
        assert!(rel(e, q) < 1e-10, "beta={beta} L={gap}: {e} vs {q}");
    }
}

#[test]
fn plate_mode_decomposition() {
    let cfg = SumConfig::default().tightened();
    for (beta, gap) in [(0.5, 1.0), (1.0, 1.0), (2.0, 1.0), (3.0, 2.0)] {
        let s = inter_sum(beta, gap, &cfg).unwrap();
        let p = plate_thermal_sum(beta, gap, &cfg).unwrap();
        let bulk = PI * PI / (240.0 * gap.powi(3)) + PI * PI * gap / (45.0 * beta.powi(4));
        let rhs = bulk - p.value;
        let slack = 2.0 * gap * s.error_bound + p.error_bound + 8.0 * f64::EPSILON * bulk;
        assert!((2.0 * gap * s.value - rhs).abs() <= slack, "beta={beta} L={gap}");
        assert!(rel(2.0 * gap * s.value, rhs) < 1e-13, "beta={beta} L={gap}");
    }
}

#[test]
fn free_energy_low_t_flat_in_temperature() {
    let cfg = SumConfig::default();
    let a = free_energy_f0(10.0, 1.0, &cfg).unwrap().total;
    let b = free_energy_f0(40.0, 1.0, &cfg).unwrap().total;
    assert!((a - b).abs() < 1e-12);
}

/// Direct partial sum with the Euler-Maclaurin tail through the first
/// correction, for `s > 1`.
fn zeta_series(s: f64) -> f64 {
    let n = 1_000_000u32;
    let mut sum = 0.0;
    for k in (1..n).rev() {
        sum += (k as f64).powf(-s);
    }
    let nf = n as f64;
    sum + nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s) + s / 12.0 * nf.powf(-s - 1.0)
}

#[test]
fn zeta_against_series() {
    for s in [1.5, 2.0, 2.5, 3.0, 4.5, 7.0] {
        assert!(rel(zeta(s).unwrap(), zeta_series(s)) < 1e-13, "s={s}");
    }
    assert!(rel(zeta_series(3.0), ZETA3) < 1e-14);
}

#[test]
fn zeta_negative_integers() {
    for (s, v) in [(-1.0, -1.0 / 12.0), (-3.0, 1.0 / 120.0), (-5.0, -1.0 / 252.0), (-7.0, 1.0 / 240.0)] {
        assert!(rel(zeta(s).unwrap(), v) < 1e-12, "s={s}");
    }
}
