//! Normalized bound-state wavefunctions: quadrature orthonormality and the
//! differential form of the ladder operators acting on the fixed-sigma
//! family, including the empirical (sigma, q) pairing scan.
//!
//! Run with: cargo run --example wavefunctions

use ncmorse::morse::{LadderParams, MorseParams};
use ncmorse::wavefn::{
    default_grid, inner_product, ladder_differential_residual, BoundStateWave, LadderSign,
};

fn main() {
    let params = MorseParams::unit_system(49.0 / 8.0).expect("valid parameters");
    let sigma = 3.0;
    let xs = default_grid(7.0, 1.0).expect("valid grid");

    println!("Gram matrix of phi_0..phi_3 at sigma = {sigma} (trapezoid quadrature):");
    let waves: Vec<_> = (0..4)
        .map(|n| {
            BoundStateWave::new(n, sigma, &params)
                .unwrap()
                .sample(&xs)
                .unwrap()
        })
        .collect();
    for wi in &waves {
        let row: Vec<String> = waves
            .iter()
            .map(|wj| format!("{:10.2e}", inner_product(wi, wj).unwrap().re))
            .collect();
        println!("  [{}]", row.join(" "));
    }

    println!();
    println!("differential ladder action vs matrix coefficients (q = sigma):");
    let matched = LadderParams::new(sigma).unwrap();
    for n in 0..=3 {
        let down = ladder_differential_residual(n, LadderSign::Minus, sigma, matched, &params)
            .unwrap();
        let up =
            ladder_differential_residual(n, LadderSign::Plus, sigma, matched, &params).unwrap();
        println!("  n = {n}: lowering residual {down:.2e}, raising residual {up:.2e}");
    }

    println!();
    println!("pairing scan: the residual singles out q = sigma");
    for q in [sigma - 0.5, sigma - 0.1, sigma, sigma + 0.1, sigma + 0.5] {
        let ladder = LadderParams::new(q).unwrap();
        let residual =
            ladder_differential_residual(1, LadderSign::Minus, sigma, ladder, &params).unwrap();
        println!("  q = {q:>4.1}: residual {residual:.3e}");
    }
}
