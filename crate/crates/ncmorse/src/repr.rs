//! Finite matrix representation of the ladder algebra on {|0>, ..., |N-1>}.
//!
//! The generators act as
//!
//! ```text
//! K- |n> = C_n |n-1>        C_n = sqrt(n (n + 2q - 1))
//! K+ |n> = C_{n+1} |n+1>
//! K0 |n> = (n + q) |n>
//! ```
//!
//! The diagonal n + q is the unique weight making [K-, K+] = 2 K0 exact on
//! interior states given these C_n, which is the positive discrete-series
//! su(1,1) structure: K0 is positive and unbounded, so every relation that
//! climbs through the truncation edge is audited on an interior block.

use crate::audit::{AssertionClass, IdentityChecker, IdentityReport};
use crate::error::Error;
use crate::morse::LadderParams;
use crate::op::{casimir_combination, commutator, C64, OperatorMatrix};

/// Basis truncation plus the representation parameter q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Representation {
    dim: usize,
    ladder: LadderParams,
}

impl Representation {
    /// Requires at least two basis states and q > 1/2.
    pub fn new(dim: usize, q: f64) -> Result<Self, Error> {
        if dim < 2 {
            return Err(Error::InvalidParameter(format!(
                "representation needs dim >= 2, got {dim}"
            )));
        }
        Ok(Self {
            dim,
            ladder: LadderParams::new(q)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> f64 {
        self.ladder.q()
    }

    pub fn ladder(&self) -> LadderParams {
        self.ladder
    }
}

/// The three generators of one representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Generators {
    pub minus: OperatorMatrix,
    pub plus: OperatorMatrix,
    pub zero: OperatorMatrix,
}

/// Builds K-, K+ and K0 as dense matrices.
///
/// K+ is constructed as the exact transpose of K-: both store the same
/// real band of ladder coefficients.
pub fn build_generators(rep: &Representation) -> Generators {
    let dim = rep.dim();
    let ladder = rep.ladder();
    let q = rep.q();
    let minus = OperatorMatrix::from_fn("K-", dim, |i, j| {
        if j >= 1 && i == j - 1 {
            C64::new(ladder.coefficient(j), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let plus = minus.transpose().with_label("K+");
    let zero = OperatorMatrix::from_fn("K0", dim, |i, j| {
        if i == j {
            C64::new(i as f64 + q, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    Generators { minus, plus, zero }
}

/// Casimir element K0^2 - (K+ K- + K- K+)/2 of the built generators.
///
/// On interior states it acts as the scalar q (q - 1).
pub fn casimir_matrix(rep: &Representation) -> OperatorMatrix {
    let gens = build_generators(rep);
    casimir_from(&gens)
}

/// Casimir combination of an already-built generator triple.
pub fn casimir_from(gens: &Generators) -> OperatorMatrix {
    casimir_combination(&gens.zero, &gens.plus, &gens.minus, "C")
}

/// Scalar q (q - 1) times the identity, the interior Casimir action.
pub fn casimir_scalar(q: f64) -> f64 {
    q * (q - 1.0)
}

/// Audits the three bracket relations and the Casimir scalar for one
/// representation, each on the margin-1 interior block.
pub fn algebra_reports(
    rep: &Representation,
    checker: &IdentityChecker,
    suffix: &str,
) -> Vec<IdentityReport> {
    let gens = build_generators(rep);
    let dim = rep.dim();
    let mut out = Vec::new();
    let named = |base: &str| format!("{base}{suffix}");

    let lowering_raising = commutator(&gens.minus, &gens.plus).expect("same basis");
    out.push(
        checker
            .check_leading(
                named("[K-, K+] = 2 K0"),
                "ladder algebra",
                AssertionClass::Proven,
                &lowering_raising,
                &gens.zero.scaled_re(2.0),
                1,
            )
            .expect("margin 1 valid for dim >= 2"),
    );

    let weight_lower = commutator(&gens.zero, &gens.minus).expect("same basis");
    out.push(
        checker
            .check_leading(
                named("[K0, K-] = -K-"),
                "ladder algebra",
                AssertionClass::Proven,
                &weight_lower,
                &gens.minus.scaled_re(-1.0),
                1,
            )
            .expect("margin 1 valid"),
    );

    let weight_raise = commutator(&gens.zero, &gens.plus).expect("same basis");
    out.push(
        checker
            .check_leading(
                named("[K0, K+] = +K+"),
                "ladder algebra",
                AssertionClass::Proven,
                &weight_raise,
                &gens.plus,
                1,
            )
            .expect("margin 1 valid"),
    );

    let casimir = casimir_from(&gens);
    let scalar = OperatorMatrix::identity("q(q-1) I", dim).scaled_re(casimir_scalar(rep.q()));
    out.push(
        checker
            .check_leading(
                named("C = q(q-1) I"),
                "ladder algebra casimir",
                AssertionClass::Proven,
                &casimir,
                &scalar,
                1,
            )
            .expect("margin 1 valid"),
    );

    out
}
