use std::f64::consts::PI;

use proptest::prelude::*;

use casimir_eft::domain::b1_coefficient;
use casimir_eft::modesum::{inter_sum, SumConfig};
use casimir_eft::propagator::{normalized_kernel, plate_propagator, ImageSign, PlateKernelInput};
use casimir_eft::specfun::{gamma_fn, polylog_neg, zeta};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn not_near_integer(x: f64) -> bool {
    (x - x.round()).abs() > 1e-3
}

proptest! {
    #[test]
    fn zeta_functional_equation(s in 0.02f64..0.98) {
        let rhs = 2f64.powf(s) * PI.powf(s - 1.0) * (PI * s / 2.0).sin() * gamma_fn(1.0 - s).unwrap() * zeta(1.0 - s).unwrap();
        prop_assert!(rel(zeta(s).unwrap(), rhs) < 1e-12);
    }

    #[test]
    fn gamma_recurrence(x in -5.5f64..12.0) {
        prop_assume!(not_near_integer(x) || x > 0.5);
        prop_assume!(not_near_integer(x + 1.0) || x + 1.0 > 0.5);
        let lhs = gamma_fn(x + 1.0).unwrap();
        let rhs = x * gamma_fn(x).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-12);
    }

    #[test]
    fn polylog_matches_series(x in 0.0f64..0.9, p in 0u32..3) {
        let mut sum = 0.0;
        let mut pow = 1.0;
        for n in 1..=10_000u32 {
            pow *= x;
            sum += (n as f64).powi(p as i32) * pow;
        }
        let v = polylog_neg(p, x).unwrap();
        prop_assert!((v - sum).abs() <= 1e-12 * sum.max(1e-300));
    }

    #[test]
    fn b1_homogeneity(alpha in 1e-4f64..0.1, m in 1.0f64..1e4, gap in 0.01f64..100.0, lambda in 0.1f64..10.0) {
        let b = b1_coefficient(alpha, m, gap).unwrap();
        prop_assert!(rel(b1_coefficient(alpha * lambda, m, gap).unwrap(), b * lambda) < 1e-14);
        prop_assert!(rel(b1_coefficient(alpha, m * lambda, gap / lambda).unwrap(), b) < 1e-14);
        prop_assert!(rel(b1_coefficient(alpha, m, gap * lambda).unwrap(), b / lambda) < 1e-14);
    }

    #[test]
    fn kernel_symmetric_and_reflection_invariant(
        gamma in 0.01f64..50.0,
        gap in 0.1f64..5.0,
        u in 0.0f64..1.0,
        v in 0.0f64..1.0,
    ) {
        let (z, zp) = (u * gap, v * gap);
        for sign in [ImageSign::Dirichlet, ImageSign::Neumann] {
            let a = PlateKernelInput::new(gamma, gap, z, zp).unwrap();
            let swapped = PlateKernelInput::new(gamma, gap, zp, z).unwrap();
            let reflected = PlateKernelInput::new(gamma, gap, gap - z, gap - zp).unwrap();
            let k = normalized_kernel(&a, sign);
            prop_assert!((k - normalized_kernel(&swapped, sign)).abs() <= 1e-14 * (1.0 + k.abs()));
            prop_assert!((k - normalized_kernel(&reflected, sign)).abs() <= 1e-13 * (1.0 + k.abs()));
        }
    }

    #[test]
    fn propagator_positive_inside(
        gamma in 0.01f64..50.0,
        gap in 0.1f64..5.0,
        u in 0.01f64..0.99,
        v in 0.01f64..0.99,
    ) {
        let inp = PlateKernelInput::new(gamma, gap, u * gap, v * gap).unwrap();
        prop_assert!(plate_propagator(&inp, ImageSign::Neumann) > 0.0);
        prop_assert!(plate_propagator(&inp, ImageSign::Dirichlet) >= 0.0);
        prop_assert!(plate_propagator(&inp, ImageSign::Neumann) >= plate_propagator(&inp, ImageSign::Dirichlet));
    }

    #[test]
    fn inter_sum_decreases_with_gap(beta in 0.05f64..20.0, gap in 0.1f64..5.0, stretch in 1.01f64..3.0) {
        let cfg = SumConfig::default();
        let near = inter_sum(beta, gap, &cfg).unwrap().value;
        let far = inter_sum(beta, gap * stretch, &cfg).unwrap().value;
        prop_assert!(near > far);
        prop_assert!(far > 0.0);
    }
}
