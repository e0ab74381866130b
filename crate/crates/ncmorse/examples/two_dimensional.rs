//! Two-oscillator tensor space: lifted generators, the diagonal ladder-form
//! Hamiltonian, its spectrum, and the Hamiltonian-ladder bracket audit in
//! which the claimed form fails while the derivable one holds.
//!
//! Run with: cargo run --example two_dimensional

use ncmorse::audit::IdentityChecker;
use ncmorse::deformed::spectrum;
use ncmorse::repr::Representation;
use ncmorse::tensor2d::{
    build_2d_generators, cross_slot_reports, h_ladder_commutator_audit, hamiltonian_ladder_form,
    HamiltonianPart,
};

fn main() {
    let rep1 = Representation::new(4, 1.5).expect("valid representation");
    let rep2 = Representation::new(4, 1.5).expect("valid representation");
    let gens = build_2d_generators(&rep1, &rep2);
    let scale = 0.5;
    let checker = IdentityChecker::default();

    println!("cross-slot commutators (all must vanish entrywise):");
    for report in cross_slot_reports(&gens, &checker) {
        println!(
            "  {:<16} residual {:.1e}",
            report.name, report.residual_norm
        );
    }

    let h = hamiltonian_ladder_form(&gens, HamiltonianPart::Total, scale);
    println!();
    println!("total ladder Hamiltonian diagonal (n, m | energy):");
    for n in 0..4 {
        for m in 0..4 {
            let idx = gens.basis.flat(n, m);
            print!("  ({n},{m}) {:>7.3}", h.entry(idx, idx).re);
        }
        println!();
    }

    let spec = spectrum(&h).expect("spectrum converges");
    println!();
    println!(
        "spectrum: {} eigenvalues, first four: {:?}",
        spec.eigenvalues.len(),
        spec.eigenvalues
            .iter()
            .take(4)
            .map(|z| z.re)
            .collect::<Vec<_>>()
    );

    println!();
    println!("Hamiltonian-ladder bracket audit:");
    for report in h_ladder_commutator_audit(&gens, scale, &checker) {
        println!(
            "  {:<52} {:<13} residual {:.3e}  -> {}",
            report.name,
            report.assertion_class.as_str(),
            report.residual_norm,
            report.verdict.as_str()
        );
    }
}
