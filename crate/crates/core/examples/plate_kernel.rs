//! The mixed-representation propagator between the plates, the boundary
//! conditions of each image sign, and the integrated coincident kernel.

use casimir_eft::audit::coincident_kernel_quadrature;
use casimir_eft::propagator::{
    image_sign_verdict, integrated_coincident_kernel, plate_propagator, ImageSign, PlateKernelInput,
};

fn main() {
    let (gamma, gap) = (1.5, 1.0);
    let zp = gap / 3.0;
    println!("{:>6} {:>14} {:>14}", "z", "Dirichlet", "Neumann");
    for i in 0..=10 {
        let z = gap * i as f64 / 10.0;
        let inp = PlateKernelInput::new(gamma, gap, z, zp).unwrap();
        println!(
            "{z:>6.2} {:>14.8} {:>14.8}",
            plate_propagator(&inp, ImageSign::Dirichlet),
            plate_propagator(&inp, ImageSign::Neumann)
        );
    }

    let v = image_sign_verdict(gamma, gap, 1e-6);
    println!("{v:?}");

    for gl in [0.1, 1.0, 5.0, 20.0] {
        let g = gl / gap;
        println!(
            "gamma L={gl:<5} closed={:.15e} z-quadrature={:.15e}",
            integrated_coincident_kernel(g, gap),
            coincident_kernel_quadrature(g, gap)
        );
    }
}
