//! Frozen values computed by routes that do not go through the production
//! code paths.

use choimap_core::detection::{
    detect, detection_interval_beta, sigma_b_mapped_closed_form, verify_map_positivity, Classification,
};
use choimap_core::linalg::{self, ComplexMatrix, Tolerance, C64};
use choimap_core::maps::{apply_map_closed, extend_map, MapParams};
use choimap_core::states::{build_rho_beta_gamma, build_sigma_b, HorodeckiParams, RhoFamilyParams};

/// Scalar evaluation of the analytic eigenvalue, written out independently of
/// `lambda_formula`.
fn lambda_scalar(w: f64, x: f64, y: f64, z: f64, beta: f64, gamma: f64) -> f64 {
    let numerator = 3.0 * w - 9.0 + x * beta + y * gamma + z * (10.0 - beta);
    numerator / (4.0 * (13.0 + gamma))
}

#[test]
fn choi_x_at_beta_two_gamma_four() {
    let expected = lambda_scalar(2.0, 1.0, 0.0, 0.0, 2.0, 4.0);
    assert!((expected + 1.0 / 68.0).abs() < 1e-16);
    let state = build_rho_beta_gamma(RhoFamilyParams::new(2.0, 4.0).unwrap());
    let mapped = extend_map(&MapParams::CHOI_X, 4, state.matrix()).unwrap();
    let min = linalg::min_eigenvalue(&mapped).unwrap();
    assert!((min - (-1.0 / 68.0)).abs() <= 1e-9, "min eigenvalue {min}");
    // -1/68
    assert!((min + 0.014_705_882_352_941_176).abs() <= 1e-9);
}

/// The zero map sends `(|e1⟩+|e2⟩)(⟨e1|+⟨e2|)` to a matrix with zero diagonal
/// and −1 at (1,2), (2,1); the 2×2 block `[[0,−1],[−1,0]]` has eigenvalues ±1.
#[test]
fn zero_map_on_two_level_projector() {
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let x = ComplexMatrix::outer(&[one, one, zero, zero]);
    let zero_map = MapParams::new(0.0, 0.0, 0.0, 0.0).unwrap();
    let mapped = apply_map_closed(&zero_map, &x).unwrap();
    let mut expected = ComplexMatrix::zeros(4);
    expected[(0, 1)] = -one;
    expected[(1, 0)] = -one;
    assert_eq!(mapped, expected);
    assert!((linalg::min_eigenvalue(&mapped).unwrap() + 1.0).abs() < 1e-15);
    assert!(!linalg::is_psd(&mapped, &Tolerance::default()).unwrap());

    let verdict = verify_map_positivity(&zero_map, 100, 0, &Tolerance::default()).unwrap();
    assert!(verdict.min_observed <= -1.0 + 1e-10);
}

#[test]
fn detection_intervals_for_sample_maps() {
    let x15 = MapParams::new(2.0, 1.5, 0.0, 0.0).unwrap();
    let iv = detection_interval_beta(&x15, 7.0);
    assert!(iv.contains(0.0) && iv.contains(1.999) && !iv.contains(2.0));

    let x01 = MapParams::new(2.0, 0.1, 0.0, 1.0).unwrap();
    let iv = detection_interval_beta(&x01, 3.0);
    assert!(!iv.contains(7.777) && iv.contains(7.778) && iv.contains(10.0));

    assert!(detection_interval_beta(&MapParams::CHOI_Y, 5.0).is_empty());
}

#[test]
fn sigma_b_closed_form_matches_extension_for_random_inputs() {
    // Deterministic pseudo-random (b, p) from a fixed LCG, independent of the
    // crate's sampler.
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..20 {
        let b = 0.01 + 0.98 * next();
        let p = MapParams::new(1.0 + 2.0 * next(), 2.0 * next(), 2.0 * next(), 2.0 * next()).unwrap();
        let sigma = build_sigma_b(HorodeckiParams::new(b).unwrap());
        let numeric = extend_map(&p, 2, sigma.matrix()).unwrap();
        let literal = sigma_b_mapped_closed_form(b, &p).unwrap();
        assert!(numeric.max_abs_diff(&literal) <= 1e-13, "b={b}, {p}");
    }
}

#[test]
fn horodecki_non_detection_examples() {
    let tol = Tolerance::default();
    let sigma = build_sigma_b(HorodeckiParams::new(0.5).unwrap());
    let report = detect(&sigma, &MapParams::CHOI_Z, &tol).unwrap();
    assert!(report.min_eig_mapped >= -tol.psd_tol);
    assert!(report.ppt);
    assert_eq!(report.classification, Classification::NotDetected);
}
