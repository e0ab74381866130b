//! Coordinate noncommutativity through exact nilpotent exponentials, and
//! the coordinate-momentum bracket in both matrix and grid form.
//!
//! Run with: cargo run --example coordinate_noncommutativity

use ncmorse::audit::IdentityChecker;
use ncmorse::morse::MorseParams;
use ncmorse::ncgeom::{heisenberg_pair, nc_coordinate_audit, nilpotent_exp, yp_commutator_check};
use ncmorse::op::commutator;
use ncmorse::repr::Representation;

fn main() {
    let checker = IdentityChecker::default();

    let theta = 0.4;
    let pair = heisenberg_pair(theta);
    let central = commutator(&pair.x1, &pair.x2).expect("same dimension");
    println!("Heisenberg pair at theta = {theta}:");
    println!("  [x1, x2] entry (0,2) = {}", central.entry(0, 2));

    let y1 = nilpotent_exp(&pair.x1.scaled_re(-1.0)).expect("nilpotent");
    println!("  exp(-x1) row 0: {} {} {}", y1.entry(0, 0), y1.entry(0, 1), y1.entry(0, 2));

    println!();
    println!("exponential-coordinate bracket audit over a few conventions:");
    for (theta, alpha, v) in [(0.4, 1.0, 1.0), (0.4, 1.3, 2.0), (-0.9, 0.7, 1.5)] {
        println!("  theta = {theta}, alpha = {alpha}, v = {v}:");
        for report in nc_coordinate_audit(theta, alpha, v, &checker) {
            println!(
                "    {:<13} residual {:.2e}  -> {}",
                report.assertion_class.as_str(),
                report.residual_norm,
                report.verdict.as_str()
            );
        }
    }

    println!();
    println!("coordinate-momentum bracket [y, p] = -i hbar alpha y:");
    let params = MorseParams::unit_system(49.0 / 8.0).expect("valid parameters");
    let rep = Representation::new(12, 1.5).expect("valid representation");
    for report in yp_commutator_check(&rep, &params, &checker) {
        println!(
            "  {:<55} residual {:.2e}  -> {}",
            report.name,
            report.residual_norm,
            report.verdict.as_str()
        );
    }
}
