//! Build a squeezed state, check it against its coherent-state form, and
//! compare truncated overlaps with the closed-form kernel.
//!
//! Run with: cargo run --release -p jacobi-states --example squeezed_overlap

use jacobi_states::algebra::BargmannIndex;
use jacobi_states::kernel::kernel;
use jacobi_states::states::{coherent_vector, overlap, proposition1_residual, squeezed_vector};
use jacobi_states::{PhasePoint, C64};

fn main() {
    let k = BargmannIndex::new(1.0).unwrap();
    let (n_fock, m_ladder) = (60, 40);
    let alpha = C64::new(0.4, -0.15);
    let w = C64::new(0.2, 0.1);

    let psi = squeezed_vector(k, alpha, w, n_fock, m_ladder).unwrap();
    println!("Psi = D(alpha) S(w) e0 at alpha = {alpha}, w = {w}");
    println!("  norm            = {:.15}", psi.norm());
    let mass = psi.truncation_mass();
    println!(
        "  truncation mass = ({:.2e}, {:.2e})",
        mass.fock_tail, mass.ladder_tail
    );

    let residual = proposition1_residual(k, alpha, w, n_fock, m_ladder).unwrap();
    println!("  vs (1-|w|^2)^k e^{{-conj(a) z/2}} e_{{z,w}}: max coeff diff = {residual:.2e}");

    // overlap of two coherent vectors against the closed kernel
    let x1 = PhasePoint::new(C64::new(0.4, 0.0), C64::new(0.2, 0.0)).unwrap();
    let x2 = PhasePoint::new(C64::new(0.1, 0.0), C64::new(0.3, 0.0)).unwrap();
    let v1 = coherent_vector(k, x1.z, x1.w, n_fock, m_ladder).unwrap();
    let v2 = coherent_vector(k, x2.z, x2.w, n_fock, m_ladder).unwrap();
    let ov = overlap(&v1, &v2).unwrap();
    let kv = kernel(k, &x2, &x1);
    println!("overlap(e_x1, e_x2) = {ov}");
    println!("kernel  K(x2, x1)   = {kv}");
    println!("relative difference = {:.2e}", (ov - kv).norm() / kv.norm());
}
