//! Numerical operator algebra for the one- and two-dimensional Morse
//! oscillator and its deformations.
//!
//! The crate builds finite matrix representations of the Morse ladder
//! operators, lifts them to the two-oscillator tensor space, mixes the two
//! slots with an invertible complex 2x2 matrix to obtain the deformed
//! (noncommutative) system, and audits every commutation relation along
//! the way, reporting interior-block residuals and separating derivable
//! relations from claims that fail under the printed generator
//! definitions.
//!
//! Entry points:
//!
//! - [`morse`]: physical parameters, bound-state energies, ladder
//!   coefficients.
//! - [`repr`]: matrix generators, Casimir element, bracket audits.
//! - [`wavefn`]: bound-state wavefunctions, quadrature, differential
//!   ladder checks.
//! - [`tensor2d`]: tensor lifts, the ladder-form Hamiltonian, 2D audits.
//! - [`deformed`]: deformation matrices, deformed generators, Casimir and
//!   Hamiltonian audits, spectra.
//! - [`ncgeom`]: exact nilpotent coordinate-bracket checks.
//! - [`cli`]: the `ncmorse` command-line front end.
//!
//! Run the runnable examples (`cargo run --example ...`) for guided tours
//! of each capability.

pub mod audit;
pub mod cli;
pub mod deformed;
mod eig;
pub mod error;
pub mod morse;
pub mod ncgeom;
pub mod op;
pub mod repr;
pub mod tensor2d;
pub mod wavefn;

#[cfg(test)]
pub(crate) mod test_support;

pub use audit::{AssertionClass, IdentityChecker, IdentityReport, Verdict, DEFAULT_TOLERANCE};
pub use error::Error;
pub use morse::{derive_spectral_data, potential_value, LadderParams, MorseParams, SpectralData};
pub use op::{anticommutator, commutator, C64, OperatorMatrix};
pub use repr::{build_generators, casimir_matrix, Generators, Representation};
