//! Generalized Choi/Kye positive maps `Φ[w,x,y,z]` on `M_4(ℂ)` and the
//! machinery needed to use them as entanglement detectors.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; randomness is always driven by an explicit seed or
//! a caller-provided generator.
//!
//! * [`linalg`]: dense complex matrices, Kronecker products, partial
//!   transposition, a Hermitian Jacobi eigensolver and principal minors.
//! * [`maps`]: the map family in operator-sum and closed form, and its
//!   block-wise extension `I_A ⊗ Φ`.
//! * [`states`]: the `4⊗4` family `ρ_{β,γ}`, the `2⊗4` Horodecki family `σ_b`
//!   and its relabelled variant, Pauli local-unitary orbits, random states.
//! * [`detection`]: the verdict engine (reports, analytic eigenvalue, grid
//!   scans, randomized positivity checks and the `2⊗4` non-detection sweep).
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod detection;
mod error;
pub mod linalg;
pub mod maps;
pub mod states;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Subsystem, Tolerance, C64};
pub use maps::MapParams;
pub use states::{BipartiteState, HorodeckiParams, RhoFamilyParams, StateFamily};
