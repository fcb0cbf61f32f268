//! Randomized falsification of map positivity.
//!
//! A clean run is evidence, not proof. Pure random density matrices are
//! almost surely full rank, while positivity fails first on rank-one
//! projectors mixing two basis vectors, so those are always checked too.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{self, ComplexMatrix, Tolerance, C64};
use crate::maps::{apply_map_closed, MapParams, PositivityConditions, MAP_DIM};
use crate::states::random_density_matrix_with;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityVerdict {
    pub map: MapParams,
    /// Number of random density matrices drawn (the adversarial set is extra).
    pub samples: usize,
    /// Smallest eigenvalue of `Φ(X)` over every tested `X`.
    pub min_observed: f64,
    /// First tested `X` with `λ_min(Φ(X)) < −psd_tol`.
    pub counterexample: Option<ComplexMatrix>,
    pub conditions: PositivityConditions,
}

impl PositivityVerdict {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// The fixed probe set: every `|e_i⟩⟨e_i|` and every unnormalized
/// `(|e_i⟩ + e^{iθ}|e_j⟩)(⟨e_i| + e^{−iθ}⟨e_j|)` with `i < j` and
/// `θ ∈ {0, π/2, π, 3π/2}`.
pub fn adversarial_set() -> Vec<ComplexMatrix> {
    let phases = [
        C64::new(1.0, 0.0),
        C64::new(0.0, 1.0),
        C64::new(-1.0, 0.0),
        C64::new(0.0, -1.0),
    ];
    let mut out = Vec::with_capacity(MAP_DIM + 6 * phases.len());
    for i in 0..MAP_DIM {
        let mut v = [C64::new(0.0, 0.0); MAP_DIM];
        v[i] = C64::new(1.0, 0.0);
        out.push(ComplexMatrix::outer(&v));
    }
    for i in 0..MAP_DIM {
        for j in (i + 1)..MAP_DIM {
            for phase in phases {
                let mut v = [C64::new(0.0, 0.0); MAP_DIM];
                v[i] = C64::new(1.0, 0.0);
                v[j] = phase;
                out.push(ComplexMatrix::outer(&v));
            }
        }
    }
    out
}

/// Evaluates `λ_min(Φ(X))` on the adversarial set followed by `samples`
/// Ginibre density matrices drawn from a ChaCha8 stream seeded with `seed`.
pub fn verify_map_positivity(p: &MapParams, samples: usize, seed: u64, tol: &Tolerance) -> Result<PositivityVerdict> {
    if samples == 0 {
        return Err(Error::param("samples", 0.0, "at least one sample is required"));
    }
    let mut min_observed = f64::INFINITY;
    let mut counterexample = None;
    let mut check = |x: ComplexMatrix| -> Result<()> {
        let ev = linalg::min_eigenvalue(&apply_map_closed(p, &x)?)?;
        if ev < min_observed {
            min_observed = ev;
        }
        if counterexample.is_none() && ev < -tol.psd_tol {
            counterexample = Some(x);
        }
        Ok(())
    };
    for x in adversarial_set() {
        check(x)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        check(random_density_matrix_with(MAP_DIM, &mut rng))?;
    }
    Ok(PositivityVerdict {
        map: *p,
        samples,
        min_observed,
        counterexample,
        conditions: p.positivity_conditions(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adversarial_set_size() {
        let set = adversarial_set();
        assert_eq!(set.len(), 28);
        assert!(set.iter().all(|x| x.is_hermitian(0.0)));
    }

    #[test]
    fn zero_map_has_counterexample() {
        let zero = MapParams::new(0.0, 0.0, 0.0, 0.0).unwrap();
        let v = verify_map_positivity(&zero, 10, 1, &Tolerance::default()).unwrap();
        assert!(!v.passed());
        assert!(v.min_observed <= -1.0 + 1e-10);
        // (|e1⟩+|e2⟩)(⟨e1|+⟨e2|) is the first failing probe.
        assert_eq!(v.counterexample.unwrap(), adversarial_set()[4]);
        assert!(!v.conditions.w_at_least_one);
    }

    #[test]
    fn balanced_map_passes() {
        let v = verify_map_positivity(&MapParams::BALANCED, 500, 7, &Tolerance::default()).unwrap();
        assert!(v.passed());
        assert!(v.conditions.all());
        assert_eq!(v.samples, 500);
    }

    #[test]
    fn zero_samples_rejected() {
        assert!(verify_map_positivity(&MapParams::CHOI_X, 0, 1, &Tolerance::default()).is_err());
    }

    #[test]
    fn seed_determines_result() {
        let tol = Tolerance::default();
        let a = verify_map_positivity(&MapParams::CHOI_Z, 50, 3, &tol).unwrap();
        let b = verify_map_positivity(&MapParams::CHOI_Z, 50, 3, &tol).unwrap();
        assert_eq!(a, b);
    }
}
