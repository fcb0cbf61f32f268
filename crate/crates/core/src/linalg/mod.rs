//! Dense complex linear algebra for matrices of desk-scale size (at most a
//! few dozen rows).

mod eigen;
mod matrix;
mod minors;

pub use eigen::{eig_hermitian, eigenvalues_hermitian, is_psd, min_eigenvalue, HermitianEigen};
pub use matrix::{tensor, ComplexMatrix, Subsystem};
pub use minors::{determinant, principal_minors, PrincipalMinor};

pub type C64 = num_complex::Complex64;

/// Numerical thresholds shared by the positivity and Hermiticity checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// A Hermitian matrix is PSD when its smallest eigenvalue is `>= -psd_tol`.
    pub psd_tol: f64,
    /// Entrywise bound on `|m_ij - conj(m_ji)|`.
    pub herm_tol: f64,
    /// Bound on imaginary residues of quantities that must be real.
    pub eig_tol: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        psd_tol: 1e-10,
        herm_tol: 1e-12,
        eig_tol: 1e-10,
    };

    pub fn new(psd_tol: f64, herm_tol: f64, eig_tol: f64) -> crate::Result<Self> {
        for (name, v) in [("psd_tol", psd_tol), ("herm_tol", herm_tol), ("eig_tol", eig_tol)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(crate::Error::param(name, v, "tolerance must be strictly positive"));
            }
        }
        Ok(Tolerance {
            psd_tol,
            herm_tol,
            eig_tol,
        })
    }

    /// Default tolerances with a different PSD threshold.
    pub fn with_psd_tol(psd_tol: f64) -> crate::Result<Self> {
        let d = Self::DEFAULT;
        Self::new(psd_tol, d.herm_tol, d.eig_tol)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}
