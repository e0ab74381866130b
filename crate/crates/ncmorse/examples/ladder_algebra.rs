//! Matrix ladder operators on a truncated basis and their bracket audits:
//! [K-, K+] = 2 K0, [K0, K-+] = -+K-+, and the Casimir scalar q(q-1).
//!
//! Run with: cargo run --example ladder_algebra

use ncmorse::audit::IdentityChecker;
use ncmorse::repr::{algebra_reports, build_generators, casimir_matrix, Representation};

fn main() {
    let rep = Representation::new(6, 1.5).expect("valid representation");
    let gens = build_generators(&rep);

    println!("lowering operator K- (dim {}):", rep.dim());
    for i in 0..rep.dim() {
        let row: Vec<String> = (0..rep.dim())
            .map(|j| format!("{:6.3}", gens.minus.entry(i, j).re))
            .collect();
        println!("  [{}]", row.join(" "));
    }
    println!();
    println!("weight diagonal K0: n + q with q = {}", rep.q());
    let diag: Vec<String> = (0..rep.dim())
        .map(|n| format!("{:.1}", gens.zero.entry(n, n).re))
        .collect();
    println!("  diag = [{}]", diag.join(", "));

    let casimir = casimir_matrix(&rep);
    println!();
    println!(
        "casimir interior value = {:.4} (expected q(q-1) = {:.4})",
        casimir.entry(0, 0).re,
        rep.q() * (rep.q() - 1.0)
    );

    println!();
    println!("bracket audits (margin-1 interior block):");
    let checker = IdentityChecker::default();
    for report in algebra_reports(&rep, &checker, "") {
        println!(
            "  {:<22} residual {:.3e}  -> {}",
            report.name,
            report.residual_norm,
            report.verdict.as_str()
        );
    }
}
