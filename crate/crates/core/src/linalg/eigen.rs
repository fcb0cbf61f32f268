//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation first strips the phase of the pivot `a_pq`, reducing the
//! 2×2 subproblem to a real symmetric one, then applies the classical
//! Jacobi rotation. Sweeps stop once the off-diagonal mass is negligible
//! relative to the Frobenius norm.

use alloc::vec::Vec;

use super::{ComplexMatrix, Tolerance, C64};
use crate::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues in ascending order with matching unit eigenvectors stored as
/// the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.values[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

fn check_hermitian(m: &ComplexMatrix) -> Result<()> {
    let deviation = m.hermitian_deviation();
    if deviation > Tolerance::DEFAULT.herm_tol {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianEigen> {
    check_hermitian(m)?;
    let n = m.dim();
    // Work on the exactly Hermitian part so round-off in the input cannot
    // leak imaginary parts onto the diagonal.
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        if i == j {
            C64::new(m[(i, i)].re, 0.0)
        } else {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        }
    });
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale > 0.0 {
        let threshold = (f64::EPSILON * scale) * (f64::EPSILON * scale);
        for _ in 0..MAX_SWEEPS {
            if off_diagonal_mass(&a) <= threshold {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += a[(p, q)].norm_sqr();
        }
    }
    s
}

/// Annihilates `a_pq` with the unitary `U = diag(1, conj(e)) · R(θ)` acting on
/// rows/columns `p, q`, where `a_pq = |a_pq|·e`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let magnitude = apq.norm();
    if magnitude == 0.0 {
        return;
    }
    let phase = apq / magnitude;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let tau = (aqq - app) / (2.0 * magnitude);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;

    // U = [[c, s], [-s·conj(e), c·conj(e)]]
    let u00 = C64::new(c, 0.0);
    let u01 = C64::new(s, 0.0);
    let u10 = phase.conj() * (-s);
    let u11 = phase.conj() * c;

    let n = a.dim();
    // A ← A U
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u00 + akq * u10;
        a[(k, q)] = akp * u01 + akq * u11;
    }
    // A ← U† A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u00.conj() * apk + u10.conj() * aqk;
        a[(q, k)] = u01.conj() * apk + u11.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
    // V ← V U
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u00 + vkq * u10;
        v[(k, q)] = vkp * u01 + vkq * u11;
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn eigenvalues_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    eig_hermitian(m).map(|e| e.values)
}

/// Smallest eigenvalue; `+∞` for the empty matrix.
pub fn min_eigenvalue(m: &ComplexMatrix) -> Result<f64> {
    Ok(eigenvalues_hermitian(m)?
        .first()
        .copied()
        .unwrap_or(f64::INFINITY))
}

pub fn is_psd(m: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    if m.hermitian_deviation() > tol.herm_tol {
        return Err(Error::NotHermitian {
            deviation: m.hermitian_deviation(),
        });
    }
    Ok(min_eigenvalue(m)? >= -tol.psd_tol)
}
