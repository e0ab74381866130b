//! Oracle helpers for the integration suites: a deterministic parameter
//! stream and closed-form reference values computed with plain arithmetic,
//! independent of the crate's linear-algebra path.
//!
//! Shared by several test targets; not every target uses every helper.
#![allow(dead_code)]

use ncmorse::C64;

pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn complex_in(&mut self, lo: f64, hi: f64) -> C64 {
        C64::new(self.range(lo, hi), self.range(lo, hi))
    }
}

/// Closed-form diagonal of the total ladder Hamiltonian over all (n, m),
/// from scratch: scale * (n (n + 2q1 - 1) - (n + q1)^2) + the slot-2 term.
pub fn ladder_hamiltonian_diagonal(
    dim1: usize,
    dim2: usize,
    q1: f64,
    q2: f64,
    scale: f64,
) -> Vec<f64> {
    let slot = |k: usize, q: f64| {
        let kf = k as f64;
        kf * (kf + 2.0 * q - 1.0) - (kf + q) * (kf + q)
    };
    let mut values = Vec::with_capacity(dim1 * dim2);
    for n in 0..dim1 {
        for m in 0..dim2 {
            values.push(scale * (slot(n, q1) + slot(m, q2)));
        }
    }
    values
}

/// Generalized binomial coefficient binom(n + a, n - k) as a product.
fn binom_shifted(n: usize, a: f64, k: usize) -> f64 {
    // product over j = 1..(n - k) of (a + k + j) / j
    let mut acc = 1.0;
    for j in 1..=(n - k) {
        acc *= (a + k as f64 + j as f64) / j as f64;
    }
    acc
}

/// Explicit finite-sum form of the associated Laguerre polynomial,
/// L_n^a(y) = sum_k (-1)^k binom(n + a, n - k) y^k / k!.
pub fn laguerre_explicit(n: usize, a: f64, y: f64) -> f64 {
    let mut total = 0.0;
    let mut factorial = 1.0;
    for k in 0..=n {
        if k > 0 {
            factorial *= k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * binom_shifted(n, a, k) * y.powi(k as i32) / factorial;
    }
    total
}
