//! `(I_2 ⊗ Φ)` on the `2⊗4` Horodecki family.
//!
//! The block-diagonal entries of `σ_b` that `Φ` would mix into off-diagonal
//! positions are all zero, so the map parameters only reach the diagonal.
//! For `w ≥ 1` each diagonal entry then dominates its row, and no member of
//! the family (or of its Pauli local-unitary orbit) is detected.

use alloc::vec::Vec;

use super::{detect, mapped_min_eigenvalue, DetectionReport};
use crate::linalg::{self, ComplexMatrix, Tolerance, C64};
use crate::maps::{extend_map, MapParams};
use crate::states::{build_sigma_b, local_unitary_orbit, pauli_local_unitaries, BipartiteState, HorodeckiParams};
use crate::{Error, Result};

/// `(I_2 ⊗ Φ)(σ_b)` written out entry by entry:
///
/// ```text
/// f = w+x+y+z
/// g = (w + z + b(w + 2x + 2y + z))/2
/// h = (z + y + b(2w + 2x + y + z))/2
/// i = (x + y + b(2w + x + y + 2z))/2
/// j = (w + x + b(w + x + 2y + 2z))/2
/// ```
///
/// with diagonal `(bf, bf, bf, bf, g, h, i, j)/(7b+1)`, entries
/// `−b/(7b+1)` at `(1,6)`, `(2,7)`, `(3,8)` and `−√(1−b²)/(2(7b+1))` at
/// `(5,8)` (1-based, mirrored).
pub fn sigma_b_mapped_closed_form(b: f64, p: &MapParams) -> Result<ComplexMatrix> {
    HorodeckiParams::new(b)?;
    let [w, x, y, z] = p.as_array();
    let f = w + x + y + z;
    let g = (w + z + b * (w + 2.0 * x + 2.0 * y + z)) / 2.0;
    let h = (z + y + b * (2.0 * w + 2.0 * x + y + z)) / 2.0;
    let i = (x + y + b * (2.0 * w + x + y + 2.0 * z)) / 2.0;
    let j = (w + x + b * (w + x + 2.0 * y + 2.0 * z)) / 2.0;
    let s = libm::sqrt(1.0 - b * b) / 2.0;
    let norm = 7.0 * b + 1.0;

    let mut m = ComplexMatrix::diag(&[b * f, b * f, b * f, b * f, g, h, i, j]);
    for (r, c, v) in [(0, 5, -b), (1, 6, -b), (2, 7, -b), (4, 7, -s)] {
        m[(r, c)] = C64::new(v, 0.0);
        m[(c, r)] = C64::new(v, 0.0);
    }
    Ok(m.scale_real(1.0 / norm))
}

/// `true` when every diagonal entry is at least the largest off-diagonal
/// modulus in its row (strictly larger when `strict`).
pub fn rows_diagonally_dominant(m: &ComplexMatrix, strict: bool) -> bool {
    (0..m.dim()).all(|r| {
        let diag = m[(r, r)].re;
        let off = (0..m.dim())
            .filter(|&c| c != r)
            .map(|c| m[(r, c)].norm())
            .fold(0.0, f64::max);
        if strict {
            diag > off
        } else {
            diag >= off
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NondetectionCertificate {
    pub b: f64,
    pub map: MapParams,
    /// `λ_min((I_2 ⊗ Φ)(σ_b))`.
    pub direct_min_eig: f64,
    /// Smallest mapped eigenvalue over the 64-member Pauli orbit.
    pub orbit_min_eig: f64,
    pub holds: bool,
}

impl NondetectionCertificate {
    pub fn compute(b: f64, p: &MapParams, tol: &Tolerance) -> Result<Self> {
        if p.w() < 1.0 {
            return Err(Error::param("w", p.w(), "non-detection certificate requires w >= 1"));
        }
        let sigma = build_sigma_b(HorodeckiParams::new(b)?);
        let direct_min_eig = linalg::min_eigenvalue(&extend_map(p, 2, sigma.matrix())?)?;
        let orbit = local_unitary_orbit(&sigma, &pauli_local_unitaries())?;
        let mut orbit_min_eig = f64::INFINITY;
        for member in &orbit {
            orbit_min_eig = orbit_min_eig.min(mapped_min_eigenvalue(member, p)?);
        }
        let holds = direct_min_eig >= -tol.psd_tol && orbit_min_eig >= -tol.psd_tol;
        Ok(NondetectionCertificate {
            b,
            map: *p,
            direct_min_eig,
            orbit_min_eig,
            holds,
        })
    }
}

/// `true` iff `(I_2 ⊗ Φ)` maps `σ_b` and all 64 Pauli-orbit members to PSD
/// matrices. Requires `w ≥ 1`.
pub fn nondetection_certificate(b: f64, p: &MapParams) -> Result<bool> {
    NondetectionCertificate::compute(b, p, &Tolerance::default()).map(|c| c.holds)
}

/// One report per member of the Pauli local-unitary orbit of `state`.
pub fn orbit_reports(state: &BipartiteState, p: &MapParams, tol: &Tolerance) -> Result<Vec<DetectionReport>> {
    local_unitary_orbit(state, &pauli_local_unitaries())?
        .iter()
        .map(|member| detect(member, p, tol))
        .collect()
}
