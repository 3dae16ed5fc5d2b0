//! Force and entropy by finite differences, next to the derivatives of the
//! regime closed forms.

use casimir_eft::domain::classify_regime;
use casimir_eft::thermo::{closed_form_entropy, closed_form_force};
use casimir_eft::{casimir_force, entropy, DerivativeConfig, PlateSystem, Regime, Scheme, SignConvention, SumConfig};

fn main() {
    let cfg = SumConfig::default();
    let alpha = 1.0 / 137.036;
    for beta in [0.1, 0.5, 1.0, 5.0, 50.0] {
        let sys = PlateSystem::new(1.0, beta, 1000.0, alpha);
        let regime = classify_regime(&sys, &cfg);
        for scheme in [Scheme::Central2, Scheme::Central4] {
            let d = DerivativeConfig {
                scheme,
                ..DerivativeConfig::default()
            };
            let sub = DerivativeConfig { subtract_bulk: true, ..d };
            let f = casimir_force(&sys, &cfg, &d, SignConvention::AsPrinted).unwrap();
            let fs = casimir_force(&sys, &cfg, &sub, SignConvention::AsPrinted).unwrap();
            let s = entropy(&sys, &cfg, &d, SignConvention::AsPrinted).unwrap();
            println!("beta={beta:<4} {:<9} {scheme:?}: force={f:.10e} without bulk={fs:.10e} entropy={s:.10e}", regime.as_str());
        }
        if regime != Regime::Crossover {
            println!(
                "          closed form: force={:.10e} without bulk={:.10e} entropy={:.10e}",
                closed_form_force(&sys, regime, false),
                closed_form_force(&sys, regime, true),
                closed_form_entropy(&sys, regime)
            );
        }
    }
}
