//! Physical Morse parameters and the scalar quantities derived from them.
//!
//! The potential well
//!
//! ```text
//! V(x) = V0 (e^{-2 alpha x} - 2 e^{-alpha x})
//! ```
//!
//! supports finitely many bound states. Their count and energies are
//! controlled by the dimensionless well parameter
//! nu = sqrt(8 mu V0 / (alpha^2 hbar^2)): level n is bound exactly when
//! 2n < nu - 1, and E_n = -(hbar^2 alpha^2 / 2 mu) s_n^2 with
//! s_n = (nu - 1 - 2n) / 2.

use crate::error::Error;

/// Physical constants of a Morse well. All four are strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseParams {
    v0: f64,
    alpha: f64,
    mu: f64,
    hbar: f64,
}

impl MorseParams {
    /// Validates that every constant is finite and strictly positive.
    pub fn new(v0: f64, alpha: f64, mu: f64, hbar: f64) -> Result<Self, Error> {
        for (name, value) in [("v0", v0), ("alpha", alpha), ("mu", mu), ("hbar", hbar)] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and strictly positive, got {value}"
                )));
            }
        }
        Ok(Self { v0, alpha, mu, hbar })
    }

    /// Convenience constructor in the unit system hbar = mu = alpha = 1.
    pub fn unit_system(v0: f64) -> Result<Self, Error> {
        Self::new(v0, 1.0, 1.0, 1.0)
    }

    /// Builds the parameter set whose well parameter equals `nu`,
    /// inverting nu = sqrt(8 mu V0 / (alpha^2 hbar^2)) for V0.
    pub fn from_well_parameter(nu: f64, alpha: f64, mu: f64, hbar: f64) -> Result<Self, Error> {
        if !nu.is_finite() || nu <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "nu must be finite and strictly positive, got {nu}"
            )));
        }
        let v0 = (nu * alpha * hbar).powi(2) / (8.0 * mu);
        Self::new(v0, alpha, mu, hbar)
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Dimensionless well parameter nu = sqrt(8 mu V0 / (alpha^2 hbar^2)).
    pub fn well_parameter(&self) -> f64 {
        (8.0 * self.mu * self.v0 / (self.alpha * self.alpha * self.hbar * self.hbar)).sqrt()
    }

    /// Energy unit hbar^2 alpha^2 / (2 mu) multiplying every level.
    pub fn energy_scale(&self) -> f64 {
        self.hbar * self.hbar * self.alpha * self.alpha / (2.0 * self.mu)
    }
}

/// Bound-state ladder of a Morse well: nu, the level count, the positive
/// quantum-defect values s_n, and the (negative) energies.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub nu: f64,
    pub bound_count: usize,
    pub s_values: Vec<f64>,
    pub energies: Vec<f64>,
    pub energy_scale: f64,
}

/// Derives nu, the bound-state count, s_n = (nu - 1 - 2n)/2 and
/// E_n = -energy_scale * s_n^2 from validated parameters.
///
/// A shallow well (nu <= 1) binds nothing; the lists come back empty.
pub fn derive_spectral_data(params: &MorseParams) -> SpectralData {
    let nu = params.well_parameter();
    let scale = params.energy_scale();
    let mut s_values = Vec::new();
    let mut energies = Vec::new();
    let mut n = 0usize;
    // membership is strict: s_n = 0 states are marginal and excluded
    while ((2 * n) as f64) < nu - 1.0 {
        let s = (nu - 1.0 - 2.0 * n as f64) / 2.0;
        s_values.push(s);
        energies.push(-scale * s * s);
        n += 1;
    }
    SpectralData {
        nu,
        bound_count: s_values.len(),
        s_values,
        energies,
        energy_scale: scale,
    }
}

/// Morse potential V(x) = V0 (e^{-2 alpha x} - 2 e^{-alpha x}).
///
/// Evaluated as V0 t (t - 2) with t = e^{-alpha x} so that the deep
/// repulsive wall saturates to +infinity instead of producing inf - inf.
pub fn potential_value(x: f64, params: &MorseParams) -> f64 {
    let t = (-params.alpha * x).exp();
    params.v0 * t * (t - 2.0)
}

/// Representation parameter q entering the ladder coefficients
/// C_n = sqrt(n (n + 2q - 1)). Kept above 1/2 so every C_n is real
/// and the n = 0 state is annihilated cleanly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderParams {
    q: f64,
}

impl LadderParams {
    pub fn new(q: f64) -> Result<Self, Error> {
        if !q.is_finite() || q <= 0.5 {
            return Err(Error::InvalidParameter(format!(
                "ladder parameter q must be finite and > 1/2, got {q}"
            )));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Ladder coefficient C_n = sqrt(n (n + 2q - 1)); exactly 0 at n = 0.
    pub fn coefficient(&self, n: usize) -> f64 {
        let nf = n as f64;
        (nf * (nf + 2.0 * self.q - 1.0)).sqrt()
    }
}
