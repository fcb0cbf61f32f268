//! The generalized Choi/Kye map family `Φ[w,x,y,z]` on `M_4(ℂ)`.
//!
//! `Φ` keeps every off-diagonal entry with its sign flipped and replaces the
//! diagonal by cyclic mixtures of the input diagonal:
//!
//! ```text
//! x̃_11 = w·x_11 + x·x_22 + y·x_33 + z·x_44
//! x̃_22 = w·x_22 + x·x_33 + y·x_44 + z·x_11
//! x̃_33 = w·x_33 + x·x_44 + y·x_11 + z·x_22
//! x̃_44 = w·x_44 + x·x_11 + y·x_22 + z·x_33
//! ```
//!
//! [`apply_map_closed`] evaluates this directly and is what the rest of the
//! crate uses. [`apply_map_kraus`] evaluates the signed operator sum over the
//! elementary operators `E_ij`, `F_ij`, `G_ij` and serves as an independent
//! check of the closed form.

use core::fmt;
use core::str::FromStr;

use crate::linalg::{ComplexMatrix, C64};
use crate::{Error, Result};

/// Dimension of the space `Φ` acts on.
pub const MAP_DIM: usize = 4;

/// Parameters `(w, x, y, z)` of `Φ[w,x,y,z]`, all nonnegative and finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapParams {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl MapParams {
    /// `Φ[2,1,0,0]`
    pub const CHOI_X: MapParams = MapParams::raw(2.0, 1.0, 0.0, 0.0);
    /// `Φ[2,0,1,0]`
    pub const CHOI_Y: MapParams = MapParams::raw(2.0, 0.0, 1.0, 0.0);
    /// `Φ[2,0,0,1]`
    pub const CHOI_Z: MapParams = MapParams::raw(2.0, 0.0, 0.0, 1.0);
    /// `Φ[2,1,1,1]`
    pub const BALANCED: MapParams = MapParams::raw(2.0, 1.0, 1.0, 1.0);

    /// The four maps used throughout the detection sweeps.
    pub const NAMED: [MapParams; 4] = [Self::CHOI_X, Self::CHOI_Y, Self::CHOI_Z, Self::BALANCED];

    const fn raw(w: f64, x: f64, y: f64, z: f64) -> Self {
        MapParams { w, x, y, z }
    }

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        for (name, v) in [("w", w), ("x", x), ("y", y), ("z", z)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::param(name, v, "map parameters must be finite and nonnegative"));
            }
        }
        Ok(Self::raw(w, x, y, z))
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// Trace scaling factor: `tr Φ(X) = (w+x+y+z)·tr X`.
    pub fn weight_sum(&self) -> f64 {
        self.w + self.x + self.y + self.z
    }

    /// Which of the sufficient positivity conditions `w ≥ 1`, `y ≥ 1`,
    /// `x·z ≥ 1` hold.
    pub fn positivity_conditions(&self) -> PositivityConditions {
        PositivityConditions {
            w_at_least_one: self.w >= 1.0,
            y_at_least_one: self.y >= 1.0,
            xz_at_least_one: self.x * self.z >= 1.0,
        }
    }
}

impl fmt::Display for MapParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Φ[{},{},{},{}]", self.w, self.x, self.y, self.z)
    }
}

/// Parses `"w,x,y,z"`.
impl FromStr for MapParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = [0.0f64; 4];
        let mut parts = s.split(',');
        for slot in values.iter_mut() {
            let part = parts.next().ok_or(Error::ParseMap("expected four comma-separated values"))?;
            *slot = part
                .trim()
                .parse()
                .map_err(|_| Error::ParseMap("malformed number"))?;
        }
        if parts.next().is_some() {
            return Err(Error::ParseMap("expected four comma-separated values"));
        }
        let [w, x, y, z] = values;
        MapParams::new(w, x, y, z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositivityConditions {
    pub w_at_least_one: bool,
    pub y_at_least_one: bool,
    pub xz_at_least_one: bool,
}

impl PositivityConditions {
    pub fn all(&self) -> bool {
        self.w_at_least_one && self.y_at_least_one && self.xz_at_least_one
    }
}

/// Index pairs `(i, j)` (0-based) whose `E_ij X E_ij†` terms carry weight
/// `x`, `y` and `z` respectively. `E_ij X E_ij† = x_jj E_ii`.
const X_PAIRS: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 3), (3, 0)];
const Y_PAIRS: [(usize, usize); 4] = [(0, 2), (2, 0), (1, 3), (3, 1)];
const Z_PAIRS: [(usize, usize); 4] = [(0, 3), (3, 2), (1, 0), (2, 1)];

/// Table of the elementary operators on `ℂ^4`:
/// `E_ij = |e_i⟩⟨e_j|`, `F_ij = (E_ii + E_jj)/√2`, `G_ij = (E_ii − E_jj)/√2`.
#[derive(Debug, Clone)]
pub struct ElementaryOps {
    e: [[ComplexMatrix; MAP_DIM]; MAP_DIM],
    /// `(i, j, F_ij, G_ij)` for `i < j`.
    fg: [(usize, usize, ComplexMatrix, ComplexMatrix); 6],
}

impl ElementaryOps {
    pub fn new() -> Self {
        let unit = |i: usize, j: usize| {
            let mut m = ComplexMatrix::zeros(MAP_DIM);
            m[(i, j)] = C64::new(1.0, 0.0);
            m
        };
        let e = core::array::from_fn(|i| core::array::from_fn(|j| unit(i, j)));
        let inv_sqrt2 = core::f64::consts::FRAC_1_SQRT_2;
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let fg = pairs.map(|(i, j)| {
            let f = (&unit(i, i) + &unit(j, j)).scale_real(inv_sqrt2);
            let g = (&unit(i, i) - &unit(j, j)).scale_real(inv_sqrt2);
            (i, j, f, g)
        });
        ElementaryOps { e, fg }
    }

    /// `E_ij` (0-based indices).
    pub fn e(&self, i: usize, j: usize) -> &ComplexMatrix {
        &self.e[i][j]
    }

    /// `F_ij` for `i < j` (0-based).
    pub fn f(&self, i: usize, j: usize) -> Option<&ComplexMatrix> {
        self.fg.iter().find(|t| t.0 == i && t.1 == j).map(|t| &t.2)
    }

    /// `G_ij` for `i < j` (0-based).
    pub fn g(&self, i: usize, j: usize) -> Option<&ComplexMatrix> {
        self.fg.iter().find(|t| t.0 == i && t.1 == j).map(|t| &t.3)
    }

    /// Operator-sum evaluation of `Φ[w,x,y,z](X)`.
    ///
    /// The `G` and `F` sums run over unordered pairs `i < j`; summing over
    /// ordered pairs would double the off-diagonal entries.
    pub fn apply(&self, p: &MapParams, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        check_dim(x)?;
        let sandwich = |a: &ComplexMatrix| &(a * x) * &a.adjoint();
        let mut out = ComplexMatrix::zeros(MAP_DIM);
        let mut accumulate = |weight: f64, a: &ComplexMatrix| {
            if weight != 0.0 {
                out = &out + &sandwich(a).scale_real(weight);
            }
        };
        for i in 0..MAP_DIM {
            accumulate(p.w, &self.e[i][i]);
        }
        for (weight, pairs) in [(p.x, &X_PAIRS), (p.y, &Y_PAIRS), (p.z, &Z_PAIRS)] {
            for &(i, j) in pairs.iter() {
                accumulate(weight, &self.e[i][j]);
            }
        }
        for (_, _, f, g) in &self.fg {
            accumulate(1.0, g);
            accumulate(-1.0, f);
        }
        Ok(out)
    }
}

impl Default for ElementaryOps {
    fn default() -> Self {
        Self::new()
    }
}

fn check_dim(x: &ComplexMatrix) -> Result<()> {
    if x.dim() != MAP_DIM {
        return Err(Error::DimensionMismatch {
            expected: MAP_DIM,
            found: x.dim(),
        });
    }
    Ok(())
}

/// `Φ[w,x,y,z](X)` via the operator-sum form.
pub fn apply_map_kraus(p: &MapParams, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    ElementaryOps::new().apply(p, x)
}

/// `Φ[w,x,y,z](X)` via the closed form.
pub fn apply_map_closed(p: &MapParams, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dim(x)?;
    let mut out = x.scale_real(-1.0);
    let d = [x[(0, 0)], x[(1, 1)], x[(2, 2)], x[(3, 3)]];
    for i in 0..MAP_DIM {
        out[(i, i)] = d[i] * p.w
            + d[(i + 1) % 4] * p.x
            + d[(i + 2) % 4] * p.y
            + d[(i + 3) % 4] * p.z;
    }
    Ok(out)
}

/// `(I_A ⊗ Φ)(ρ)` for `ρ` acting on `ℂ^{dim_a} ⊗ ℂ^4`.
///
/// `Φ` is linear, so it acts independently on each of the `dim_a²` 4×4
/// blocks, including off-diagonal (non-Hermitian) ones.
pub fn extend_map(p: &MapParams, dim_a: usize, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !rho.dim().is_multiple_of(MAP_DIM) {
        return Err(Error::IndivisibleDimension {
            dim: rho.dim(),
            block: MAP_DIM,
        });
    }
    if rho.dim() != dim_a * MAP_DIM {
        return Err(Error::DimensionMismatch {
            expected: dim_a * MAP_DIM,
            found: rho.dim(),
        });
    }
    let mut out = ComplexMatrix::zeros(rho.dim());
    for a in 0..dim_a {
        for c in 0..dim_a {
            let block = rho.block(a * MAP_DIM, c * MAP_DIM, MAP_DIM);
            out.set_block(a * MAP_DIM, c * MAP_DIM, &apply_map_closed(p, &block)?);
        }
    }
    Ok(out)
}
