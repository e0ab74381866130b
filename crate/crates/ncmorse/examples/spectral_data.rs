//! Bound-state ladder of a Morse well: well parameter, level count,
//! energies, and a few potential values.
//!
//! Run with: cargo run --example spectral_data

use ncmorse::morse::{derive_spectral_data, potential_value, MorseParams};

fn main() {
    // V0 = 49/8 in the unit system hbar = mu = alpha = 1 gives nu = 7
    let params = MorseParams::unit_system(49.0 / 8.0).expect("valid parameters");
    let data = derive_spectral_data(&params);

    println!("well parameter nu  = {}", data.nu);
    println!("energy scale       = {}", data.energy_scale);
    println!("bound states       = {}", data.bound_count);
    println!();
    println!("{:>3} {:>10} {:>14}", "n", "s_n", "E_n");
    for (n, (s, e)) in data.s_values.iter().zip(&data.energies).enumerate() {
        println!("{n:>3} {s:>10.4} {e:>14.6}");
    }

    println!();
    println!("potential profile (V0 = {}):", params.v0());
    for x in [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0] {
        println!("  V({x:>4.1}) = {:>12.6}", potential_value(x, &params));
    }

    // a shallow well binds nothing
    let shallow = MorseParams::from_well_parameter(0.8, 1.0, 1.0, 1.0).unwrap();
    let none = derive_spectral_data(&shallow);
    println!();
    println!(
        "shallow well nu = {}: {} bound states",
        none.nu, none.bound_count
    );
}
