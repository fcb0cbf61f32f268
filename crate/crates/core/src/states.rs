//! State factories: the `4⊗4` family `ρ_{β,γ}`, the `2⊗4` Horodecki family
//! `σ_b` and its relabelled variant `ϱ_b`, Pauli local-unitary orbits, and
//! Ginibre-sampled random density matrices.
//!
//! Computational basis ordering is `|i j⟩ ↦ i·dim_b + j` (subsystem A major).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{self, tensor, ComplexMatrix, Subsystem, Tolerance, C64};
use crate::{Error, Result};

/// Which named family a state was built from, if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateFamily {
    RhoBetaGamma(RhoFamilyParams),
    SigmaB(HorodeckiParams),
    VarrhoB(HorodeckiParams),
}

/// A validated density matrix on `ℂ^{dim_a} ⊗ ℂ^{dim_b}`.
#[derive(Debug, Clone)]
pub struct BipartiteState {
    dim_a: usize,
    dim_b: usize,
    matrix: ComplexMatrix,
    label: String,
    family: Option<StateFamily>,
}

impl BipartiteState {
    /// Validates Hermiticity (`1e-12`), unit trace (`1e-12`) and positivity
    /// (`λ_min ≥ −1e-10`).
    pub fn new(dim_a: usize, dim_b: usize, matrix: ComplexMatrix, label: impl Into<String>) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::InvalidState("subsystem dimensions must be positive"));
        }
        if matrix.dim() != dim_a * dim_b {
            return Err(Error::DimensionMismatch {
                expected: dim_a * dim_b,
                found: matrix.dim(),
            });
        }
        let tol = Tolerance::DEFAULT;
        let deviation = matrix.hermitian_deviation();
        if deviation > tol.herm_tol {
            return Err(Error::NotHermitian { deviation });
        }
        if (matrix.trace() - C64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::InvalidState("trace differs from 1"));
        }
        if !linalg::is_psd(&matrix, &tol)? {
            return Err(Error::InvalidState("matrix has a negative eigenvalue"));
        }
        Ok(BipartiteState {
            dim_a,
            dim_b,
            matrix,
            label: label.into(),
            family: None,
        })
    }

    fn with_family(mut self, family: StateFamily) -> Self {
        self.family = Some(family);
        self
    }

    /// `ρ_A ⊗ ρ_B` for two density matrices.
    pub fn product(rho_a: &ComplexMatrix, rho_b: &ComplexMatrix, label: impl Into<String>) -> Result<Self> {
        Self::new(rho_a.dim(), rho_b.dim(), tensor(rho_a, rho_b), label)
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Option<StateFamily> {
        self.family
    }

    pub fn partial_transpose(&self, sub: Subsystem) -> ComplexMatrix {
        self.matrix
            .partial_transpose(self.dim_a, self.dim_b, sub)
            .expect("state dimensions are consistent by construction")
    }

    /// PPT test on subsystem B (the spectrum of the A-transpose is the same).
    pub fn is_ppt(&self, tol: &Tolerance) -> Result<bool> {
        linalg::is_psd(&self.partial_transpose(Subsystem::B), tol)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::eigenvalues_hermitian(&self.matrix).expect("states are Hermitian by construction")
    }
}

/// `(β, γ)` with `0 ≤ β ≤ 10` and `γ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoFamilyParams {
    beta: f64,
    gamma: f64,
}

impl RhoFamilyParams {
    pub fn new(beta: f64, gamma: f64) -> Result<Self> {
        if !(0.0..=10.0).contains(&beta) {
            return Err(Error::param("beta", beta, "must lie in [0, 10]"));
        }
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(Error::param("gamma", gamma, "must be finite and nonnegative"));
        }
        Ok(RhoFamilyParams { beta, gamma })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// `b ∈ (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorodeckiParams {
    b: f64,
}

impl HorodeckiParams {
    pub fn new(b: f64) -> Result<Self> {
        if !(b > 0.0 && b < 1.0) {
            return Err(Error::param("b", b, "must lie in the open interval (0, 1)"));
        }
        Ok(HorodeckiParams { b })
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// `(1/4) Σ_a |a, a+shift⟩⟨a, a+shift|` with indices mod 4.
fn shifted_diagonal_projector(shift: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(16);
    for a in 0..4 {
        let idx = a * 4 + (a + shift) % 4;
        m[(idx, idx)] = C64::new(0.25, 0.0);
    }
    m
}

/// `|ψ⟩⟨ψ|` with `|ψ⟩ = (|00⟩ + |11⟩ + |22⟩ + |33⟩)/2`.
fn maximally_entangled_4x4() -> ComplexMatrix {
    let mut psi = [C64::new(0.0, 0.0); 16];
    for a in 0..4 {
        psi[a * 5] = C64::new(0.5, 0.0);
    }
    ComplexMatrix::outer(&psi)
}

/// `ρ_{β,γ} = (β·σ₁ + γ·σ₂ + (10−β)·σ₃ + 3·σ₄)/(13+γ)` on `4⊗4`.
///
/// `σ₁`, `σ₂`, `σ₃` are uniform mixtures over `|a, a+1⟩`, `|a, a+2⟩`,
/// `|a, a+3⟩` and `σ₄` is the maximally entangled projector.
pub fn build_rho_beta_gamma(p: RhoFamilyParams) -> BipartiteState {
    let norm = 13.0 + p.gamma;
    let terms = [
        (p.beta, shifted_diagonal_projector(1)),
        (p.gamma, shifted_diagonal_projector(2)),
        (10.0 - p.beta, shifted_diagonal_projector(3)),
        (3.0, maximally_entangled_4x4()),
    ];
    let mut m = ComplexMatrix::zeros(16);
    for (coeff, sigma) in &terms {
        m = &m + &sigma.scale_real(coeff / norm);
    }
    BipartiteState::new(4, 4, m, format!("rho_beta_gamma(beta={},gamma={})", p.beta, p.gamma))
        .expect("ρ_{β,γ} is a valid state for admissible parameters")
        .with_family(StateFamily::RhoBetaGamma(p))
}

fn horodecki_prefactored(b: f64, entries: &[(usize, usize, f64)]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(8);
    let norm = 7.0 * b + 1.0;
    for &(i, j, v) in entries {
        m[(i, j)] = C64::new(v / norm, 0.0);
        m[(j, i)] = C64::new(v / norm, 0.0);
    }
    m
}

/// The `2⊗4` Horodecki bound entangled state `σ_b`.
pub fn build_sigma_b(p: HorodeckiParams) -> BipartiteState {
    let b = p.b;
    let s = libm::sqrt(1.0 - b * b) / 2.0;
    let h = (1.0 + b) / 2.0;
    let m = horodecki_prefactored(
        b,
        &[
            (0, 0, b),
            (1, 1, b),
            (2, 2, b),
            (3, 3, b),
            (5, 5, b),
            (6, 6, b),
            (4, 4, h),
            (7, 7, h),
            (0, 5, b),
            (1, 6, b),
            (2, 7, b),
            (4, 7, s),
        ],
    );
    BipartiteState::new(2, 4, m, format!("sigma_b(b={b})"))
        .expect("σ_b is a valid state for b in (0,1)")
        .with_family(StateFamily::SigmaB(p))
}

/// `ϱ_b`, a relabelled form of `σ_b` built from a different pure entangled
/// component.
pub fn build_varrho_b(p: HorodeckiParams) -> BipartiteState {
    let b = p.b;
    let s = libm::sqrt(1.0 - b * b) / 2.0;
    let h = (1.0 + b) / 2.0;
    let m = horodecki_prefactored(
        b,
        &[
            (0, 0, b),
            (1, 1, b),
            (2, 2, b),
            (3, 3, b),
            (4, 4, b),
            (7, 7, b),
            (5, 5, h),
            (6, 6, h),
            (0, 7, -b),
            (1, 4, b),
            (3, 6, b),
            (5, 6, s),
        ],
    );
    BipartiteState::new(2, 4, m, format!("varrho_b(b={b})"))
        .expect("ϱ_b is a valid state for b in (0,1)")
        .with_family(StateFamily::VarrhoB(p))
}

/// `[I, σx, σy, σz]`.
pub fn pauli_matrices() -> [ComplexMatrix; 4] {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    let m = |e: [C64; 4]| ComplexMatrix::from_row_major(e.to_vec()).expect("2x2");
    [
        m([one, z, z, one]),
        m([z, one, one, z]),
        m([z, -i, i, z]),
        m([one, z, z, -one]),
    ]
}

/// A local unitary `P_a ⊗ (P_b ⊗ P_c)` on `2⊗4`, tagged by its Pauli indices.
#[derive(Debug, Clone)]
pub struct PauliLocalUnitary {
    pub indices: [usize; 3],
    pub matrix: ComplexMatrix,
}

/// All 64 products `P_a ⊗ P_b ⊗ P_c`, ordered by `16a + 4b + c`.
pub fn pauli_local_unitaries() -> Vec<PauliLocalUnitary> {
    let paulis = pauli_matrices();
    let mut out = Vec::with_capacity(64);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let local_b = tensor(&paulis[b], &paulis[c]);
                out.push(PauliLocalUnitary {
                    indices: [a, b, c],
                    matrix: tensor(&paulis[a], &local_b),
                });
            }
        }
    }
    out
}

/// `U ρ U†` for every `U` in `unitaries`.
pub fn local_unitary_orbit(state: &BipartiteState, unitaries: &[PauliLocalUnitary]) -> Result<Vec<BipartiteState>> {
    unitaries
        .iter()
        .map(|u| {
            let m = state.matrix.conjugate_by(&u.matrix)?;
            let [a, b, c] = u.indices;
            let label = format!("{}|U[{a}{b}{c}]", state.label);
            let mut member = BipartiteState::new(state.dim_a, state.dim_b, m, label)?;
            member.family = state.family;
            Ok(member)
        })
        .collect()
}

/// `G G† / tr(G G†)` with `G` filled by i.i.d. standard complex Gaussians.
pub fn random_density_matrix_with<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let mut gram = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let v: C64 = (0..dim).map(|k| g[(i, k)] * g[(j, k)].conj()).sum();
            if i == j {
                gram[(i, i)] = C64::new(v.re, 0.0);
            } else {
                gram[(i, j)] = v;
                gram[(j, i)] = v.conj();
            }
        }
    }
    let trace = gram.trace().re;
    gram.scale_real(1.0 / trace)
}

/// Deterministic random density matrix; equal seeds give equal matrices.
pub fn random_density_matrix(dim: usize, seed: u64) -> ComplexMatrix {
    random_density_matrix_with(dim, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn rho_family_has_unit_trace() {
        for (beta, gamma) in [(0.0, 0.0), (2.0, 4.0), (10.0, 7.5), (5.5, 100.0)] {
            let s = build_rho_beta_gamma(RhoFamilyParams::new(beta, gamma).unwrap());
            assert!((s.matrix().trace().re - 1.0).abs() < 1e-12);
            assert_eq!((s.dim_a(), s.dim_b()), (4, 4));
        }
    }

    #[test]
    fn rho_family_ppt_examples() {
        let ppt = build_rho_beta_gamma(RhoFamilyParams::new(1.0, 3.0).unwrap());
        assert!(ppt.is_ppt(&tol()).unwrap());
        let npt = build_rho_beta_gamma(RhoFamilyParams::new(5.0, 2.0).unwrap());
        assert!(!npt.is_ppt(&tol()).unwrap());
    }

    #[test]
    fn rho_family_params_range() {
        assert!(RhoFamilyParams::new(-0.1, 1.0).is_err());
        assert!(RhoFamilyParams::new(10.1, 1.0).is_err());
        assert!(RhoFamilyParams::new(5.0, -1.0).is_err());
        assert!(RhoFamilyParams::new(5.0, f64::INFINITY).is_err());
        assert!(RhoFamilyParams::new(10.0, 0.0).is_ok());
    }

    #[test]
    fn sigma_b_is_ppt_state() {
        let s = build_sigma_b(HorodeckiParams::new(0.5).unwrap());
        assert!((s.matrix().trace().re - 1.0).abs() < 1e-12);
        assert!(s.is_ppt(&tol()).unwrap());
        assert!(linalg::is_psd(&s.partial_transpose(Subsystem::A), &tol()).unwrap());
    }

    #[test]
    fn horodecki_params_open_interval() {
        for b in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(HorodeckiParams::new(b).is_err(), "b = {b}");
        }
    }

    #[test]
    fn varrho_matches_sigma_spectrum() {
        let p = HorodeckiParams::new(0.5).unwrap();
        let s = build_sigma_b(p).eigenvalues();
        let v = build_varrho_b(p);
        assert!((v.matrix().trace().re - 1.0).abs() < 1e-12);
        for (a, b) in s.iter().zip(v.eigenvalues()) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!(v.is_ppt(&tol()).unwrap());
    }

    #[test]
    fn pauli_cube() {
        let us = pauli_local_unitaries();
        assert_eq!(us.len(), 64);
        assert_eq!(us[0].matrix, ComplexMatrix::identity(8));
        for u in &us {
            let uu = &u.matrix * &u.matrix.adjoint();
            assert!(uu.max_abs_diff(&ComplexMatrix::identity(8)) < 1e-14);
            assert!((linalg::determinant(&u.matrix).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn orbit_rejects_wrong_dimension() {
        let s = build_rho_beta_gamma(RhoFamilyParams::new(2.0, 4.0).unwrap());
        assert!(local_unitary_orbit(&s, &pauli_local_unitaries()).is_err());
    }

    #[test]
    fn random_density_matrix_is_deterministic_and_valid() {
        let a = random_density_matrix(4, 11);
        assert_eq!(a, random_density_matrix(4, 11));
        assert_ne!(a, random_density_matrix(4, 12));
        assert!((a.trace().re - 1.0).abs() < 1e-12);
        assert!(linalg::min_eigenvalue(&a).unwrap() >= -1e-12);
    }

    #[test]
    fn state_validation() {
        assert!(BipartiteState::new(2, 2, ComplexMatrix::identity(4), "unnormalized").is_err());
        assert!(BipartiteState::new(2, 2, ComplexMatrix::diag(&[1.5, -0.5, 0.0, 0.0]), "neg").is_err());
        assert!(BipartiteState::new(2, 3, ComplexMatrix::identity(4).scale_real(0.25), "dims").is_err());
        assert!(BipartiteState::new(2, 2, ComplexMatrix::identity(4).scale_real(0.25), "ok").is_ok());
    }

    #[test]
    fn bell_state_partial_transpose() {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let z = C64::new(0.0, 0.0);
        let bell = ComplexMatrix::outer(&[C64::new(h, 0.0), z, z, C64::new(h, 0.0)]);
        let s = BipartiteState::new(2, 2, bell, "bell").unwrap();
        let pt = s.partial_transpose(Subsystem::B);
        assert!((linalg::min_eigenvalue(&pt).unwrap() + 0.5).abs() < 1e-14);
        assert!(!s.is_ppt(&tol()).unwrap());
    }
}
