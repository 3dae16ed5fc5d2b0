//! Run the identity ledger on the default grid and show where each sign
//! convention for the bulk order-alpha piece breaks.

use casimir_eft::audit::{default_grid, run_identity_suite, AuditThresholds, AuditTolerances, IdentityId};
use casimir_eft::{SignConvention, SumConfig};

fn main() {
    let report = run_identity_suite(
        &default_grid(),
        &SumConfig::default(),
        &AuditTolerances::default(),
        &AuditThresholds::default(),
    )
    .unwrap();

    for id in IdentityId::ALL {
        if id.depends_on_convention() {
            for conv in SignConvention::ALL {
                let n = report
                    .reports
                    .iter()
                    .filter(|r| r.identity_id == id && r.convention == Some(conv));
                let (pass, total) = n.fold((0, 0), |(p, t), r| (p + r.pass as usize, t + 1));
                println!(
                    "{id:?} {:<11} {pass}/{total} pass, max residual {:.3e}",
                    conv.as_str(),
                    report.max_residual(id, Some(conv))
                );
            }
        } else {
            let n = report.reports.iter().filter(|r| r.identity_id == id);
            let (pass, total) = n.fold((0, 0), |(p, t), r| (p + r.pass as usize, t + 1));
            println!("{id:?} {pass}/{total} pass, max residual {:.3e}", report.max_residual(id, None));
        }
    }
    println!("conventions passing I2 and I4: {:?}", report.conventions_passing_i2_i4);
    println!(
        "zeta-regularized bulk piece F1a/b1 at beta=L=1: {:.12e} ({})",
        report.zeta_oracle.value,
        report.zeta_oracle.agrees_with.as_str()
    );
    println!("scalar image sign: {:?}", report.image_sign.scalar_channel);
}
