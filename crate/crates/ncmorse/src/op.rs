//! Dense complex operator matrices.
//!
//! [`OperatorMatrix`] is the universal carrier for generators, Hamiltonians
//! and Casimir elements: a square complex matrix tagged with a short label
//! describing what it represents. Arithmetic is ordinary dense linear
//! algebra; the bracket operations live here so every module audits its
//! relations through the same code path.

use nalgebra::{Complex, DMatrix};

use crate::error::Error;

/// Double-precision complex scalar used throughout the crate.
pub type C64 = Complex<f64>;

/// Square complex matrix with a provenance label.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    label: String,
    mat: DMatrix<C64>,
}

impl OperatorMatrix {
    /// Wraps a dense matrix, requiring it to be square with finite entries.
    pub fn new(label: impl Into<String>, mat: DMatrix<C64>) -> Result<Self, Error> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::DimensionMismatch {
                left: mat.nrows(),
                right: mat.ncols(),
            });
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidParameter(
                "operator matrix entries must be finite".into(),
            ));
        }
        Ok(Self {
            label: label.into(),
            mat,
        })
    }

    pub fn zeros(label: impl Into<String>, dim: usize) -> Self {
        Self {
            label: label.into(),
            mat: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(label: impl Into<String>, dim: usize) -> Self {
        Self {
            label: label.into(),
            mat: DMatrix::identity(dim, dim),
        }
    }

    /// Builds the matrix entrywise from a closure over (row, column).
    pub fn from_fn(label: impl Into<String>, dim: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        Self {
            label: label.into(),
            mat: DMatrix::from_fn(dim, dim, f),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.mat[(row, col)]
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            label: self.label.clone(),
            mat: self.mat.map(|z| z * factor),
        }
    }

    pub fn scaled_re(&self, factor: f64) -> Self {
        self.scaled(C64::new(factor, 0.0))
    }

    pub fn transpose(&self) -> Self {
        Self {
            label: format!("{}^T", self.label),
            mat: self.mat.transpose(),
        }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            label: format!("{}^+", self.label),
            mat: self.mat.adjoint(),
        }
    }

    /// Kronecker product, indexed so that (i1,i2) maps to i1 * dim(other) + i2.
    pub fn kron(&self, other: &Self, label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            mat: self.mat.kronecker(&other.mat),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.norm()
    }

    /// Frobenius norm of the submatrix indexed by `keep` on both sides.
    pub fn frobenius_norm_on(&self, keep: &[usize]) -> f64 {
        let mut sum = 0.0;
        for &i in keep {
            for &j in keep {
                sum += self.mat[(i, j)].norm_sqr();
            }
        }
        sum.sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// True when the matrix equals its own adjoint within `tol` per entry.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                if (self.mat[(i, j)] - self.mat[(j, i)].conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Exact entrywise equality, used for zero-tolerance reduction checks.
    pub fn equals_entrywise(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.mat == other.mat
    }
}

fn check_dims(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<(), Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

impl std::ops::Add for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim(), rhs.dim(), "operator dimensions must agree");
        OperatorMatrix {
            label: format!("({} + {})", self.label, rhs.label),
            mat: &self.mat + &rhs.mat,
        }
    }
}

impl std::ops::Sub for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim(), rhs.dim(), "operator dimensions must agree");
        OperatorMatrix {
            label: format!("({} - {})", self.label, rhs.label),
            mat: &self.mat - &rhs.mat,
        }
    }
}

impl std::ops::Mul for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim(), rhs.dim(), "operator dimensions must agree");
        OperatorMatrix {
            label: format!("{}*{}", self.label, rhs.label),
            mat: &self.mat * &rhs.mat,
        }
    }
}

/// Commutator [a, b] = ab - ba.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix, Error> {
    check_dims(a, b)?;
    let mat = &a.mat * &b.mat - &b.mat * &a.mat;
    Ok(OperatorMatrix {
        label: format!("[{}, {}]", a.label, b.label),
        mat,
    })
}

/// Anticommutator {a, b} = ab + ba.
pub fn anticommutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix, Error> {
    check_dims(a, b)?;
    let mat = &a.mat * &b.mat + &b.mat * &a.mat;
    Ok(OperatorMatrix {
        label: format!("{{{}, {}}}", a.label, b.label),
        mat,
    })
}

/// Casimir combination zero^2 - (plus*minus + minus*plus)/2.
///
/// Shared by the 1D, 2D and deformed constructions so that reduction
/// checks at the identity deformation compare bitwise-identical results.
pub(crate) fn casimir_combination(
    zero: &OperatorMatrix,
    plus: &OperatorMatrix,
    minus: &OperatorMatrix,
    label: impl Into<String>,
) -> OperatorMatrix {
    let sym = anticommutator(plus, minus).expect("casimir operands share one basis");
    (&(zero * zero) - &sym.scaled_re(0.5)).with_label(label)
}

/// Ladder-form Hamiltonian term scale * (plus*minus - zero^2).
pub(crate) fn hamiltonian_term(
    plus: &OperatorMatrix,
    minus: &OperatorMatrix,
    zero: &OperatorMatrix,
    scale: f64,
    label: impl Into<String>,
) -> OperatorMatrix {
    (&(plus * minus) - &(zero * zero))
        .scaled_re(scale)
        .with_label(label)
}
