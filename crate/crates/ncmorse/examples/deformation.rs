//! Deformed ladder operators under an invertible 2x2 mixing matrix: the
//! surviving commutation relations, the index typo exposed by the cross
//! weight bracket, the broken centrality of the deformed Casimir, and the
//! deformed spectrum.
//!
//! Run with: cargo run --example deformation

use ncmorse::audit::{AssertionClass, IdentityChecker};
use ncmorse::deformed::{
    build_deformed, deformed_commutator_audit, deformed_hamiltonian,
    hamiltonian_expansion_reports, noncentrality_report, spectrum, DeformationMatrix,
};
use ncmorse::repr::Representation;
use ncmorse::tensor2d::build_2d_generators;

fn main() {
    let rep = Representation::new(6, 1.5).expect("valid representation");
    let gens = build_2d_generators(&rep, &rep);
    let checker = IdentityChecker::default();
    let scale = 0.5;

    // an upper-triangular shear mixes slot 2 into slot 1
    let g = DeformationMatrix::parse("1,1;0,1").expect("invertible");
    println!("deformation g = [[1, 1], [0, 1]], det = {}", g.det());
    let ds = build_deformed(&gens, &g);

    println!();
    println!("surviving commutation relations:");
    for report in deformed_commutator_audit(&ds, &checker) {
        println!(
            "  {:<44} {:<13} residual {:.2e}  -> {}",
            report.name,
            report.assertion_class.as_str(),
            report.residual_norm,
            report.verdict.as_str()
        );
    }

    println!();
    let central = noncentrality_report(&ds, &checker);
    println!(
        "centrality probe: {} -> {} (residual {:.3e})",
        central.name,
        central.verdict.as_str(),
        central.residual_norm
    );
    println!("a flagged probe confirms the deformed Casimir left the center");

    println!();
    println!("deformed Hamiltonian expansion audit:");
    for report in hamiltonian_expansion_reports(&ds, scale, &checker) {
        println!(
            "  {:<56} residual {:.2e}  -> {}",
            report.name,
            report.residual_norm,
            report.verdict.as_str()
        );
    }

    let h = deformed_hamiltonian(&ds, scale);
    let spec = spectrum(&h).expect("spectrum converges");
    println!();
    println!(
        "deformed spectrum (real symmetric for real g): first six of {}:",
        spec.eigenvalues.len()
    );
    for value in spec.eigenvalues.iter().take(6) {
        println!("  {:>9.5} + {:>8.1e} i", value.re, value.im);
    }

    let flagged = deformed_commutator_audit(&ds, &checker)
        .into_iter()
        .filter(|r| r.assertion_class == AssertionClass::PaperClaimed && !r.passed())
        .count();
    println!();
    println!("claimed cross-weight variants flagged at this g: {flagged}");
}
