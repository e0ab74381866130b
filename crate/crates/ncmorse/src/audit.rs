//! Identity auditing: residuals of operator relations on interior blocks.
//!
//! Truncating an infinite ladder of basis states corrupts any relation
//! that walks through the top of the basis. Each check therefore carries
//! an interior margin: the number of top states (per axis, in tensor
//! bases) excluded from the residual. A report also records whether the
//! relation is derivable from the generator definitions (`Proven`) or
//! merely asserted by the source material (`PaperClaimed`); flagged
//! claims are documentation, not failures.

use crate::error::Error;
use crate::op::OperatorMatrix;

/// Default relative tolerance separating truncation noise from genuine
/// violations at double precision and desk-scale dimensions.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Whether a relation is derivable or merely asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssertionClass {
    Proven,
    PaperClaimed,
}

impl AssertionClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            AssertionClass::Proven => "PROVEN",
            AssertionClass::PaperClaimed => "PAPER-CLAIMED",
        }
    }
}

/// Outcome of one audited relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Flagged,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Flagged => "FLAGGED",
        }
    }
}

/// One audited relation: interior Frobenius norms of both sides, the
/// residual of their difference, and the resulting verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub paper_ref: String,
    pub lhs_norm: f64,
    pub rhs_norm: f64,
    pub residual_norm: f64,
    pub interior_margin: usize,
    pub assertion_class: AssertionClass,
    pub verdict: Verdict,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Residual evaluator with a configurable relative tolerance.
#[derive(Debug, Clone, Copy)]
pub struct IdentityChecker {
    tol: f64,
}

impl Default for IdentityChecker {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOLERANCE,
        }
    }
}

impl IdentityChecker {
    pub fn new(tol: f64) -> Self {
        Self { tol }
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Audits lhs against rhs on the leading (dim - margin) x (dim - margin)
    /// block. The verdict passes when
    /// residual <= tol * (1 + max(lhs_norm, rhs_norm)).
    pub fn check_leading(
        &self,
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        class: AssertionClass,
        lhs: &OperatorMatrix,
        rhs: &OperatorMatrix,
        margin: usize,
    ) -> Result<IdentityReport, Error> {
        if lhs.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                left: lhs.dim(),
                right: rhs.dim(),
            });
        }
        if lhs.dim() <= margin {
            return Err(Error::InvalidParameter(format!(
                "interior margin {margin} leaves no states of a dim-{} basis",
                lhs.dim()
            )));
        }
        let keep: Vec<usize> = (0..lhs.dim() - margin).collect();
        self.check_masked(name, paper_ref, class, lhs, rhs, &keep, margin)
    }

    /// Audits lhs against rhs on an arbitrary set of kept basis indices.
    /// Tensor-product bases pass the per-axis interior here, since a
    /// per-axis margin is not a contiguous block of the flat index.
    #[allow(clippy::too_many_arguments)]
    pub fn check_masked(
        &self,
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        class: AssertionClass,
        lhs: &OperatorMatrix,
        rhs: &OperatorMatrix,
        keep: &[usize],
        recorded_margin: usize,
    ) -> Result<IdentityReport, Error> {
        if lhs.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                left: lhs.dim(),
                right: rhs.dim(),
            });
        }
        if keep.is_empty() {
            return Err(Error::InvalidParameter(
                "interior mask keeps no basis states".into(),
            ));
        }
        let lhs_norm = lhs.frobenius_norm_on(keep);
        let rhs_norm = rhs.frobenius_norm_on(keep);
        let residual_norm = (lhs - rhs).frobenius_norm_on(keep);
        Ok(self.report_from_norms(name, paper_ref, class, lhs_norm, rhs_norm, residual_norm, recorded_margin))
    }

    /// Assembles a report from norms computed elsewhere (grid checks).
    #[allow(clippy::too_many_arguments)]
    pub fn report_from_norms(
        &self,
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        class: AssertionClass,
        lhs_norm: f64,
        rhs_norm: f64,
        residual_norm: f64,
        recorded_margin: usize,
    ) -> IdentityReport {
        let verdict = if residual_norm <= self.tol * (1.0 + lhs_norm.max(rhs_norm)) {
            Verdict::Pass
        } else {
            Verdict::Flagged
        };
        IdentityReport {
            name: name.into(),
            paper_ref: paper_ref.into(),
            lhs_norm,
            rhs_norm,
            residual_norm,
            interior_margin: recorded_margin,
            assertion_class: class,
            verdict,
        }
    }
}
