//! Deterministic helpers shared by unit tests: a seeded generator for
//! parameter sweeps and naive reference implementations kept independent
//! of the production linear-algebra path.

use crate::op::{C64, OperatorMatrix};

/// SplitMix64: tiny deterministic stream for test parameter sampling.
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

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn complex_in(&mut self, lo: f64, hi: f64) -> C64 {
        C64::new(self.range(lo, hi), self.range(lo, hi))
    }
}

/// Naive triple-loop product, independent of the nalgebra-backed path.
pub fn naive_mul(a: &OperatorMatrix, b: &OperatorMatrix) -> Vec<Vec<C64>> {
    let n = a.dim();
    assert_eq!(n, b.dim());
    let mut out = vec![vec![C64::new(0.0, 0.0); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..n {
                *cell += a.entry(i, k) * b.entry(k, j);
            }
        }
    }
    out
}

/// Naive commutator ab - ba through [`naive_mul`].
pub fn naive_commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Vec<Vec<C64>> {
    let ab = naive_mul(a, b);
    let ba = naive_mul(b, a);
    ab.into_iter()
        .zip(ba)
        .map(|(r1, r2)| r1.into_iter().zip(r2).map(|(x, y)| x - y).collect())
        .collect()
}

/// Max entry deviation between an operator and a naive matrix.
pub fn max_deviation(op: &OperatorMatrix, reference: &[Vec<C64>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in reference.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            worst = worst.max((op.entry(i, j) - value).norm());
        }
    }
    worst
}

/// Random dense operator with entries in the complex unit box.
pub fn random_operator(rng: &mut SplitMix64, label: &str, dim: usize) -> OperatorMatrix {
    let entries: Vec<C64> = (0..dim * dim).map(|_| rng.complex_in(-1.0, 1.0)).collect();
    OperatorMatrix::from_fn(label, dim, |i, j| entries[i * dim + j])
}
