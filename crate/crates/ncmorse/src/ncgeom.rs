//! Coordinate noncommutativity checks through an exact nilpotent
//! representation, plus the coordinate-momentum bracket in ladder form.
//!
//! A commutator [x1, x2] equal to a nonzero multiple of the identity has
//! no finite-dimensional realization (the trace obstructs it), so the
//! checks run on the 3x3 Heisenberg pair whose commutator is the central
//! matrix unit E13. Every exponential then terminates after the quadratic
//! term and the combined-exponential identities become exact polynomial
//! statements, with residuals at machine zero.

use crate::audit::{AssertionClass, IdentityChecker, IdentityReport};
use crate::error::Error;
use crate::morse::MorseParams;
use crate::op::{commutator, C64, OperatorMatrix};
use crate::repr::{build_generators, Representation};
use crate::wavefn::GridFunction;

/// Two 3x3 coordinates with central commutator i theta E13.
#[derive(Debug, Clone, PartialEq)]
pub struct NilpotentPair {
    pub x1: OperatorMatrix,
    pub x2: OperatorMatrix,
    pub theta: f64,
}

/// Matrix unit E_{rc} in three dimensions.
fn matrix_unit(label: &str, row: usize, col: usize) -> OperatorMatrix {
    OperatorMatrix::from_fn(label, 3, |i, j| {
        if i == row && j == col {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Builds x1 = E12 and x2 = i theta E23, so that [x1, x2] = i theta E13
/// exactly and the commutator is central. theta = 0 is allowed and yields
/// a commuting (degenerate) pair.
pub fn heisenberg_pair(theta: f64) -> NilpotentPair {
    let x1 = matrix_unit("x1", 0, 1);
    let x2 = matrix_unit("x2", 1, 2).scaled(C64::new(0.0, theta));
    NilpotentPair { x1, x2, theta }
}

/// Exact exponential I + a + a^2/2 of a nilpotent matrix with a^3 = 0.
pub fn nilpotent_exp(a: &OperatorMatrix) -> Result<OperatorMatrix, Error> {
    let squared = a * a;
    let cubed = &squared * a;
    if cubed.max_abs() != 0.0 {
        return Err(Error::NotNilpotent {
            label: a.label().to_string(),
        });
    }
    let identity = OperatorMatrix::identity("I", a.dim());
    Ok((&(&identity + a) + &squared.scaled_re(0.5)).with_label(format!("exp({})", a.label())))
}

/// Audits the commutator of the exponential coordinates
/// y_i = v exp(-alpha x_i).
///
/// The derivable combined-exponential form, exact because the central
/// commutator terminates every series, is
///
/// ```text
/// [y1, y2] = v^2 exp(-alpha (x1 + x2)) (exp(+alpha^2 c / 2) - exp(-alpha^2 c / 2))
/// ```
///
/// with c = [x1, x2]. The claimed variant keeps a single power of v and
/// drops alpha^2 from the exponent; it is emitted alongside and flagged
/// except where v and alpha make the two coincide.
pub fn nc_coordinate_audit(
    theta: f64,
    alpha: f64,
    v: f64,
    checker: &IdentityChecker,
) -> Vec<IdentityReport> {
    let pair = heisenberg_pair(theta);
    let exp_x1 = nilpotent_exp(&pair.x1.scaled_re(-alpha)).expect("strictly upper triangular");
    let exp_x2 = nilpotent_exp(&pair.x2.scaled_re(-alpha)).expect("strictly upper triangular");
    let y1 = exp_x1.scaled_re(v).with_label("y1");
    let y2 = exp_x2.scaled_re(v).with_label("y2");
    let lhs = commutator(&y1, &y2).expect("same dimension");

    let central = commutator(&pair.x1, &pair.x2).expect("same dimension");
    let exp_sum =
        nilpotent_exp(&(&pair.x1 + &pair.x2).scaled_re(-alpha)).expect("strictly upper triangular");
    let half_scale = alpha * alpha / 2.0;
    let sinh_like = |scale: f64| -> OperatorMatrix {
        let forward = nilpotent_exp(&central.scaled_re(scale)).expect("central is nilpotent");
        let backward = nilpotent_exp(&central.scaled_re(-scale)).expect("central is nilpotent");
        &forward - &backward
    };
    let derived_rhs = (&exp_sum * &sinh_like(half_scale)).scaled_re(v * v);
    let claimed_rhs = (&exp_sum * &sinh_like(0.5)).scaled_re(v);

    vec![
        checker
            .check_leading(
                "derived [y1, y2] = v^2 exp(-a(x1+x2)) (exp(+a^2 c/2) - exp(-a^2 c/2))",
                "combined-exponential coordinate bracket",
                AssertionClass::Proven,
                &lhs,
                &derived_rhs,
                0,
            )
            .expect("margin 0 valid"),
        checker
            .check_leading(
                "claimed [y1, y2] = v exp(-a(x1+x2)) (exp(+c/2) - exp(-c/2))",
                "combined-exponential coordinate bracket",
                AssertionClass::PaperClaimed,
                &lhs,
                &claimed_rhs,
                0,
            )
            .expect("margin 0 valid"),
    ]
}

/// Tolerance for grid-based derivative checks; central differences on the
/// default grid cannot reach the matrix tolerance.
pub const GRID_CHECK_TOLERANCE: f64 = 1e-6;

/// Audits [y, p] = -i hbar alpha y at the matrix level (through the ladder
/// forms y = 2 K0 - K+ - K- and p = i hbar alpha (K+ - K-) / 2) and at the
/// function level (finite differences against Gaussian test functions).
pub fn yp_commutator_check(
    rep: &Representation,
    params: &MorseParams,
    checker: &IdentityChecker,
) -> Vec<IdentityReport> {
    vec![
        yp_matrix_report(rep, params, checker),
        yp_grid_report(params),
    ]
}

/// Matrix-level half of [`yp_commutator_check`]; margin 1 because the
/// bracket leans on [K-, K+] = 2 K0.
pub fn yp_matrix_report(
    rep: &Representation,
    params: &MorseParams,
    checker: &IdentityChecker,
) -> IdentityReport {
    let gens = build_generators(rep);
    let hbar = params.hbar();
    let alpha = params.alpha();
    let y = (&gens.zero.scaled_re(2.0) - &(&gens.plus + &gens.minus)).with_label("Y");
    let p = (&gens.plus - &gens.minus)
        .scaled(C64::new(0.0, hbar * alpha / 2.0))
        .with_label("P");
    let lhs = commutator(&y, &p).expect("same basis");
    let rhs = y.scaled(C64::new(0.0, -hbar * alpha));
    checker
        .check_leading(
            "[Y, P] = -i hbar alpha Y (ladder matrices)",
            "coordinate-momentum bracket",
            AssertionClass::Proven,
            &lhs,
            &rhs,
            1,
        )
        .expect("margin 1 valid")
}

/// Function-level half of [`yp_commutator_check`]: the momentum is a
/// central-difference stencil applied to Gaussian test functions. The
/// stencil error grows with y = nu e^{-alpha x} at the left edge, so the
/// grid is fine enough to keep truncation well under the grid tolerance.
pub fn yp_grid_report(params: &MorseParams) -> IdentityReport {
    let grid_checker = IdentityChecker::new(GRID_CHECK_TOLERANCE);
    let hbar = params.hbar();
    let alpha = params.alpha();
    let nu = params.well_parameter();
    let samples = 40001usize;
    let half_width = 3.0 / alpha;
    let step = 2.0 * half_width / (samples - 1) as f64;
    let xs: Vec<f64> = (0..samples).map(|k| -half_width + step * k as f64).collect();
    let centers = [-0.5, 0.0, 0.7];

    let mut lhs_sq = 0.0;
    let mut rhs_sq = 0.0;
    let mut diff_sq = 0.0;
    for center in centers {
        let f: Vec<f64> = xs
            .iter()
            .map(|&x| (-(alpha * x - center).powi(2)).exp())
            .collect();
        let yv: Vec<f64> = xs.iter().map(|&x| nu * (-alpha * x).exp()).collect();
        let yf: Vec<f64> = f.iter().zip(&yv).map(|(fv, yvv)| fv * yvv).collect();
        // [y, p] f = -i hbar (y Df - D(y f)); target -i hbar alpha y f
        let mut lhs_vals = Vec::with_capacity(samples - 2);
        let mut rhs_vals = Vec::with_capacity(samples - 2);
        for k in 1..samples - 1 {
            let df = (f[k + 1] - f[k - 1]) / (2.0 * step);
            let dyf = (yf[k + 1] - yf[k - 1]) / (2.0 * step);
            lhs_vals.push(C64::new(0.0, -hbar) * C64::new(yv[k] * df - dyf, 0.0));
            rhs_vals.push(C64::new(0.0, -hbar * alpha * yf[k]));
        }
        let interior_xs = xs[1..samples - 1].to_vec();
        let lhs_grid = GridFunction::new(interior_xs.clone(), lhs_vals).expect("grid increases");
        let rhs_grid = GridFunction::new(interior_xs.clone(), rhs_vals).expect("grid increases");
        let diff_vals: Vec<C64> = lhs_grid
            .values()
            .iter()
            .zip(rhs_grid.values())
            .map(|(a, b)| a - b)
            .collect();
        let diff_grid = GridFunction::new(interior_xs, diff_vals).expect("grid increases");
        lhs_sq += lhs_grid.norm().powi(2);
        rhs_sq += rhs_grid.norm().powi(2);
        diff_sq += diff_grid.norm().powi(2);
    }
    grid_checker.report_from_norms(
        "[y, p] f = -i hbar alpha y f (grid, gaussian test functions)",
        "coordinate-momentum bracket",
        AssertionClass::Proven,
        lhs_sq.sqrt(),
        rhs_sq.sqrt(),
        diff_sq.sqrt(),
        0,
    )
}
