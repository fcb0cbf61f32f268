use alloc::vec::Vec;
use core::str::FromStr;

use super::{detect, DetectionReport};
use crate::linalg::Tolerance;
use crate::maps::MapParams;
use crate::states::{build_rho_beta_gamma, build_sigma_b, HorodeckiParams, RhoFamilyParams};
use crate::{Error, Result};

/// Inclusive arithmetic progression `lo, lo+step, …, ≤ hi`. Empty when
/// `hi < lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange {
    lo: f64,
    hi: f64,
    step: f64,
}

impl GridRange {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::InvalidGrid("range bounds must be finite"));
        }
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidGrid("step must be positive"));
        }
        Ok(GridRange { lo, hi, step })
    }

    /// A single value.
    pub fn point(v: f64) -> Result<Self> {
        Self::new(v, v, 1.0)
    }

    pub fn len(&self) -> usize {
        if self.hi < self.lo {
            return 0;
        }
        libm::floor((self.hi - self.lo) / self.step + 1e-9) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |k| (self.lo + k as f64 * self.step).min(self.hi))
    }
}

/// Parses `LO:HI:STEP`.
impl FromStr for GridRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split(':').map(|p| p.trim().parse::<f64>());
        match (it.next(), it.next(), it.next(), it.next()) {
            (Some(Ok(lo)), Some(Ok(hi)), Some(Ok(step)), None) => GridRange::new(lo, hi, step),
            _ => Err(Error::InvalidGrid("expected LO:HI:STEP")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanFamily {
    /// `ρ_{β,γ}` over a `γ × β` grid.
    RhoBetaGamma { beta: GridRange, gamma: GridRange },
    /// `σ_b` over a range of `b`.
    SigmaB { b: GridRange },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanPoint {
    RhoBetaGamma { beta: f64, gamma: f64 },
    SigmaB { b: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub family: ScanFamily,
    pub points: Vec<(ScanPoint, DetectionReport)>,
}

impl ScanResult {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn reports(&self) -> impl Iterator<Item = &DetectionReport> {
        self.points.iter().map(|(_, r)| r)
    }
}

/// Runs [`detect`] at every grid point.
///
/// For `ρ_{β,γ}` the order is row-major with `γ` as the row index: all `β`
/// values for the first `γ`, then the next `γ`, and so on.
pub fn scan_grid(family: ScanFamily, p: &MapParams, tol: &Tolerance) -> Result<ScanResult> {
    let mut points = Vec::new();
    match family {
        ScanFamily::RhoBetaGamma { beta, gamma } => {
            // Validate everything before evaluating anything.
            let mut grid = Vec::with_capacity(beta.len() * gamma.len());
            for g in gamma.values() {
                for b in beta.values() {
                    grid.push(RhoFamilyParams::new(b, g)?);
                }
            }
            for params in grid {
                let report = detect(&build_rho_beta_gamma(params), p, tol)?;
                let point = ScanPoint::RhoBetaGamma {
                    beta: params.beta(),
                    gamma: params.gamma(),
                };
                points.push((point, report));
            }
        }
        ScanFamily::SigmaB { b } => {
            let grid = b.values().map(HorodeckiParams::new).collect::<Result<Vec<_>>>()?;
            for params in grid {
                let report = detect(&build_sigma_b(params), p, tol)?;
                points.push((ScanPoint::SigmaB { b: params.b() }, report));
            }
        }
    }
    Ok(ScanResult { family, points })
}
