//! Bound-state wavefunctions, quadrature, and the differential form of the
//! ladder operators.
//!
//! The normalized bound-state family at fixed sigma is
//!
//! ```text
//! phi_n(x) = N_n y^sigma e^{-y/2} L_n^{2 sigma - 1}(y),   y = nu e^{-alpha x}
//! N_n      = sqrt(alpha n! / Gamma(2 sigma + n))
//! ```
//!
//! The ladder operators act on this family in differential form as
//! (q + n) - y/2 -+ y d/dy; their action reproduces the matrix ladder
//! coefficients exactly when q = sigma, which
//! [`ladder_differential_residual`] measures on a quadrature grid.

use crate::error::Error;
use crate::morse::{LadderParams, MorseParams};
use crate::op::C64;

/// Largest y kept on the default grid; e^{-y/2} underflows well before this.
const Y_MAX: f64 = 700.0;
/// Smallest y kept on the default grid.
const Y_MIN: f64 = 1e-8;
/// Default sample count of the quadrature grid.
pub const DEFAULT_GRID_SAMPLES: usize = 4000;

/// Degree and superscript of an associated Laguerre polynomial L_n^a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreParams {
    pub n: usize,
    pub a: f64,
}

impl LaguerreParams {
    /// Requires a > -1 so the weight y^a e^{-y} is integrable.
    pub fn new(n: usize, a: f64) -> Result<Self, Error> {
        if !a.is_finite() || a <= -1.0 {
            return Err(Error::InvalidParameter(format!(
                "Laguerre superscript must be finite and > -1, got {a}"
            )));
        }
        Ok(Self { n, a })
    }

    pub fn eval(&self, y: f64) -> f64 {
        laguerre_eval(self.n, self.a, y)
    }
}

/// Associated Laguerre polynomial by the three-term recurrence
/// (k+1) L_{k+1} = (2k + 1 + a - y) L_k - (k + a) L_{k-1}.
pub fn laguerre_eval(n: usize, a: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - y;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - y) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// ln Gamma by the Lanczos approximation (g = 7, 9 coefficients),
/// accurate to about 1e-14 relative over the positive axis.
pub fn ln_gamma(x: f64) -> f64 {
    // published coefficient table, kept at full printed precision
    #[allow(clippy::excessive_precision)]
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection keeps the small-argument branch accurate
        return std::f64::consts::PI.ln() - (std::f64::consts::PI * x).sin().abs().ln()
            - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Complex samples over a strictly increasing coordinate grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    xs: Vec<f64>,
    values: Vec<C64>,
}

impl GridFunction {
    pub fn new(xs: Vec<f64>, values: Vec<C64>) -> Result<Self, Error> {
        if xs.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "grid has {} coordinates but {} samples",
                xs.len(),
                values.len()
            )));
        }
        if xs.len() < 2 {
            return Err(Error::InvalidParameter(
                "grid functions need at least two samples".into(),
            ));
        }
        // the all() form also rejects NaN coordinates
        if !xs.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(
                "grid coordinates must be strictly increasing".into(),
            ));
        }
        Ok(Self { xs, values })
    }

    pub fn from_real(xs: Vec<f64>, values: Vec<f64>) -> Result<Self, Error> {
        let values = values.into_iter().map(|v| C64::new(v, 0.0)).collect();
        Self::new(xs, values)
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Quadrature L2 norm sqrt(<f, f>).
    pub fn norm(&self) -> f64 {
        inner_product(self, self)
            .expect("a grid always matches itself")
            .re
            .max(0.0)
            .sqrt()
    }
}

/// Trapezoidal inner product integral conj(f) g dx over a shared grid.
pub fn inner_product(f: &GridFunction, g: &GridFunction) -> Result<C64, Error> {
    if f.xs != g.xs {
        return Err(Error::GridMismatch);
    }
    let xs = &f.xs;
    let m = xs.len();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..m {
        let w = match i {
            0 => (xs[1] - xs[0]) / 2.0,
            _ if i == m - 1 => (xs[m - 1] - xs[m - 2]) / 2.0,
            _ => (xs[i + 1] - xs[i - 1]) / 2.0,
        };
        acc += f.values[i].conj() * g.values[i] * C64::new(w, 0.0);
    }
    Ok(acc)
}

/// Uniform grid on which y = nu e^{-alpha x} spans [1e-8, 700].
pub fn default_grid(nu: f64, alpha: f64) -> Result<Vec<f64>, Error> {
    grid_with_samples(nu, alpha, DEFAULT_GRID_SAMPLES)
}

/// Uniform grid as [`default_grid`] with an explicit sample count.
pub fn grid_with_samples(nu: f64, alpha: f64, samples: usize) -> Result<Vec<f64>, Error> {
    if !nu.is_finite() || nu <= 0.0 || !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "grid needs nu > 0 and alpha > 0, got nu = {nu}, alpha = {alpha}"
        )));
    }
    if samples < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid needs at least 2 samples, got {samples}"
        )));
    }
    let x_lo = (nu / Y_MAX).ln() / alpha;
    let x_hi = (nu / Y_MIN).ln() / alpha;
    let step = (x_hi - x_lo) / (samples - 1) as f64;
    Ok((0..samples).map(|i| x_lo + step * i as f64).collect())
}

/// One normalized bound-state wavefunction of the fixed-sigma family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundStateWave {
    n: usize,
    sigma: f64,
    nu: f64,
    alpha: f64,
    log_norm: f64,
}

impl BoundStateWave {
    /// Builds phi_n for the well described by `params` (nu is derived).
    pub fn new(n: usize, sigma: f64, params: &MorseParams) -> Result<Self, Error> {
        Self::from_scaled(n, sigma, params.well_parameter(), params.alpha())
    }

    /// Builds phi_n directly from the dimensionless pair (nu, alpha).
    pub fn from_scaled(n: usize, sigma: f64, nu: f64, alpha: f64) -> Result<Self, Error> {
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "sigma must be finite and strictly positive, got {sigma}"
            )));
        }
        if !nu.is_finite() || nu <= 0.0 || !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "wavefunction needs nu > 0 and alpha > 0, got nu = {nu}, alpha = {alpha}"
            )));
        }
        // log of N_n, kept in log space so large Gamma arguments cannot overflow
        let log_norm = 0.5 * (alpha.ln() + ln_gamma(n as f64 + 1.0) - ln_gamma(2.0 * sigma + n as f64));
        Ok(Self {
            n,
            sigma,
            nu,
            alpha,
            log_norm,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Morse coordinate y = nu e^{-alpha x}.
    pub fn y_of(&self, x: f64) -> f64 {
        self.nu * (-self.alpha * x).exp()
    }

    /// phi and the scaled derivative y dphi/dy, sharing the envelope.
    fn eval_parts(&self, x: f64) -> (f64, f64) {
        let y = self.y_of(x);
        let exponent = self.log_norm + self.sigma * y.ln() - y / 2.0;
        if exponent < -745.0 || !y.is_finite() {
            // envelope underflows to zero before the polynomial can overflow
            return (0.0, 0.0);
        }
        let envelope = exponent.exp();
        let a = 2.0 * self.sigma - 1.0;
        let phi = envelope * laguerre_eval(self.n, a, y);
        // d/dy L_n^a = -L_{n-1}^{a+1}
        let poly_term = if self.n == 0 {
            0.0
        } else {
            -envelope * y * laguerre_eval(self.n - 1, a + 1.0, y)
        };
        let y_dphi_dy = phi * (self.sigma - y / 2.0) + poly_term;
        (phi, y_dphi_dy)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_parts(x).0
    }

    /// Analytic derivative dphi/dx = -alpha y dphi/dy.
    pub fn eval_dx(&self, x: f64) -> f64 {
        -self.alpha * self.eval_parts(x).1
    }

    pub fn sample(&self, xs: &[f64]) -> Result<GridFunction, Error> {
        GridFunction::from_real(xs.to_vec(), xs.iter().map(|&x| self.eval(x)).collect())
    }
}

/// Pointwise wavefunction value phi_n^sigma(x) for the given well.
pub fn phi_eval(n: usize, sigma: f64, x: f64, params: &MorseParams) -> Result<f64, Error> {
    Ok(BoundStateWave::new(n, sigma, params)?.eval(x))
}

/// Which ladder action to apply in differential form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderSign {
    Minus,
    Plus,
}

/// Applies the differential ladder operator (q + n) - y/2 -+ y d/dy to
/// phi_n and returns the relative quadrature residual against the matrix
/// action C_n phi_{n-1} (resp. C_{n+1} phi_{n+1}).
///
/// For n = 0 with the minus sign the target is zero and the returned value
/// is the norm of K- phi_0 itself, i.e. an annihilation check.
pub fn ladder_differential_residual(
    n: usize,
    sign: LadderSign,
    sigma: f64,
    ladder: LadderParams,
    params: &MorseParams,
) -> Result<f64, Error> {
    let nu = params.well_parameter();
    let alpha = params.alpha();
    let wave = BoundStateWave::from_scaled(n, sigma, nu, alpha)?;
    let xs = default_grid(nu, alpha)?;
    let q = ladder.q();

    let (target_index, coefficient) = match sign {
        LadderSign::Minus if n == 0 => (None, 0.0),
        LadderSign::Minus => (Some(n - 1), ladder.coefficient(n)),
        LadderSign::Plus => (Some(n + 1), ladder.coefficient(n + 1)),
    };

    let mut applied = Vec::with_capacity(xs.len());
    for &x in &xs {
        let (phi, y_dphi) = wave.eval_parts(x);
        let y = wave.y_of(x);
        let scalar = (q + n as f64 - y / 2.0) * phi;
        let value = match sign {
            LadderSign::Minus => scalar - y_dphi,
            LadderSign::Plus => scalar + y_dphi,
        };
        applied.push(value);
    }
    let applied = GridFunction::from_real(xs.clone(), applied)?;

    let target_values = match target_index {
        Some(m) => {
            let target = BoundStateWave::from_scaled(m, sigma, nu, alpha)?;
            xs.iter().map(|&x| coefficient * target.eval(x)).collect()
        }
        None => vec![0.0; xs.len()],
    };
    let target = GridFunction::from_real(xs, target_values)?;

    let diff_values: Vec<C64> = applied
        .values()
        .iter()
        .zip(target.values())
        .map(|(a, t)| a - t)
        .collect();
    let diff = GridFunction::new(applied.xs().to_vec(), diff_values)?;
    Ok(diff.norm() / target.norm().max(1.0))
}
