//! Entanglement verdicts from `(I ⊗ Φ)` applied to bipartite states.

mod horodecki;
mod interval;
mod positivity;
mod scan;

pub use horodecki::{
    nondetection_certificate, orbit_reports, rows_diagonally_dominant, sigma_b_mapped_closed_form, NondetectionCertificate,
};
pub use interval::{detection_interval_beta, BetaInterval};
pub use positivity::{adversarial_set, verify_map_positivity, PositivityVerdict};
pub use scan::{scan_grid, GridRange, ScanFamily, ScanPoint, ScanResult};

use alloc::string::String;
use core::fmt;

use crate::linalg::{self, Tolerance};
use crate::maps::{extend_map, MapParams, MAP_DIM};
use crate::states::{BipartiteState, RhoFamilyParams, StateFamily};
use crate::{Error, Result};

/// `|λ|` below this marks a grid point as sitting on a detection boundary.
pub const BOUNDARY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Partial transpose has a negative eigenvalue.
    NptEntangled,
    /// PPT, yet `(I ⊗ Φ)(ρ)` has a negative eigenvalue.
    PptEntangledDetected,
    NotDetected,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::NptEntangled => "NPT_ENTANGLED",
            Classification::PptEntangledDetected => "PPT_ENTANGLED_DETECTED",
            Classification::NotDetected => "NOT_DETECTED",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "NPT_ENTANGLED" => Some(Classification::NptEntangled),
            "PPT_ENTANGLED_DETECTED" => Some(Classification::PptEntangledDetected),
            "NOT_DETECTED" => Some(Classification::NotDetected),
            _ => None,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionReport {
    pub state_label: String,
    pub map: MapParams,
    /// Smallest eigenvalue of `(I_A ⊗ Φ)(ρ)`.
    pub min_eig_mapped: f64,
    /// Closed-form candidate eigenvalue, for `ρ_{β,γ}` inputs only.
    pub lambda_analytic: Option<f64>,
    pub ppt: bool,
    pub classification: Classification,
    /// `|λ| ≤ BOUNDARY_TOL`; such points are never counted as detections.
    pub boundary: bool,
    /// `min_eig_mapped < −psd_tol` and not on a boundary, regardless of PPT.
    pub map_detects: bool,
}

/// `λ = (−9 + 3w + (10−β)z + xβ + yγ) / (52 + 4γ)`, the only eigenvalue of
/// `(I_4 ⊗ Φ)(ρ_{β,γ})` that can become negative.
pub fn lambda_formula(p: &MapParams, s: &RhoFamilyParams) -> f64 {
    let (beta, gamma) = (s.beta(), s.gamma());
    (-9.0 + 3.0 * p.w() + (10.0 - beta) * p.z() + p.x() * beta + p.y() * gamma) / (52.0 + 4.0 * gamma)
}

/// Smallest eigenvalue of `(I_A ⊗ Φ)(ρ)`.
pub fn mapped_min_eigenvalue(state: &BipartiteState, p: &MapParams) -> Result<f64> {
    if state.dim_b() != MAP_DIM {
        return Err(Error::DimensionMismatch {
            expected: MAP_DIM,
            found: state.dim_b(),
        });
    }
    let mapped = extend_map(p, state.dim_a(), state.matrix())?;
    linalg::min_eigenvalue(&mapped)
}

/// Runs the PPT test and the map test on one state.
///
/// NPT takes precedence in the classification; `map_detects` still records
/// whether the map alone sees the state as entangled.
pub fn detect(state: &BipartiteState, p: &MapParams, tol: &Tolerance) -> Result<DetectionReport> {
    let min_eig_mapped = mapped_min_eigenvalue(state, p)?;
    let ppt = state.is_ppt(tol)?;
    let lambda_analytic = match state.family() {
        Some(StateFamily::RhoBetaGamma(params)) => Some(lambda_formula(p, &params)),
        _ => None,
    };
    let boundary = lambda_analytic.is_some_and(|l| l.abs() <= BOUNDARY_TOL);
    let map_detects = !boundary && min_eig_mapped < -tol.psd_tol;
    let classification = if !ppt {
        Classification::NptEntangled
    } else if map_detects {
        Classification::PptEntangledDetected
    } else {
        Classification::NotDetected
    };
    Ok(DetectionReport {
        state_label: state.label().into(),
        map: *p,
        min_eig_mapped,
        lambda_analytic,
        ppt,
        classification,
        boundary,
        map_detects,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{build_rho_beta_gamma, random_density_matrix};

    fn rho(beta: f64, gamma: f64) -> BipartiteState {
        build_rho_beta_gamma(RhoFamilyParams::new(beta, gamma).unwrap())
    }

    #[test]
    fn lambda_examples() {
        for beta in [0.0, 2.5, 7.0, 10.0] {
            let s = RhoFamilyParams::new(beta, 3.0).unwrap();
            assert_eq!(lambda_formula(&MapParams::CHOI_Y, &s), 0.0);
        }
        for gamma in [0.0, 3.0, 40.0] {
            let s = RhoFamilyParams::new(3.0, gamma).unwrap();
            assert_eq!(lambda_formula(&MapParams::CHOI_X, &s), 0.0);
        }
        let s = RhoFamilyParams::new(9.0, 3.0).unwrap();
        assert_eq!(lambda_formula(&MapParams::CHOI_Z, &s), -0.03125);
    }

    #[test]
    fn bound_entangled_point_is_detected() {
        let r = detect(&rho(2.0, 4.0), &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        assert!(r.ppt);
        assert_eq!(r.classification, Classification::PptEntangledDetected);
        assert!((r.min_eig_mapped + 1.0 / 68.0).abs() < 1e-9);
        assert!((r.lambda_analytic.unwrap() + 1.0 / 68.0).abs() < 1e-15);
        assert!(!r.boundary && r.map_detects);
    }

    #[test]
    fn undetected_point() {
        let r = detect(&rho(5.0, 5.0), &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        assert_eq!(r.classification, Classification::NotDetected);
        assert!(r.lambda_analytic.unwrap() > 0.0);
    }

    #[test]
    fn npt_takes_precedence() {
        let r = detect(&rho(0.5, 1.0), &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        assert!(!r.ppt);
        assert!(r.map_detects);
        assert_eq!(r.classification, Classification::NptEntangled);
    }

    #[test]
    fn boundary_points_are_flagged() {
        let r = detect(&rho(3.0, 4.0), &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        assert!(r.boundary);
        assert!(!r.map_detects);
        assert_eq!(r.classification, Classification::NotDetected);
    }

    #[test]
    fn product_state_is_not_detected() {
        let s = BipartiteState::product(&random_density_matrix(2, 1), &random_density_matrix(4, 2), "product").unwrap();
        let r = detect(&s, &MapParams::BALANCED, &Tolerance::default()).unwrap();
        assert_eq!(r.classification, Classification::NotDetected);
        assert!(r.min_eig_mapped >= -1e-10);
        assert_eq!(r.lambda_analytic, None);
    }

    #[test]
    fn detect_requires_four_dimensional_b() {
        let s = BipartiteState::new(4, 2, crate::ComplexMatrix::identity(8).scale_real(0.125), "4x2").unwrap();
        assert!(detect(&s, &MapParams::CHOI_X, &Tolerance::default()).is_err());
    }

    #[test]
    fn classification_names_round_trip() {
        for c in [
            Classification::NptEntangled,
            Classification::PptEntangledDetected,
            Classification::NotDetected,
        ] {
            assert_eq!(Classification::parse(c.as_str()), Some(c));
        }
        assert_eq!(Classification::parse("nope"), None);
    }
}
