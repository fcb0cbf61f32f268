use core::fmt;

use crate::maps::MapParams;

/// Sub-interval of `β ∈ [0, 10]` where the analytic eigenvalue is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BetaInterval {
    Empty,
    /// `lo ≤ β < hi` when `lo_closed` is set and `hi_closed` is not, etc.
    Range {
        lo: f64,
        hi: f64,
        lo_closed: bool,
        hi_closed: bool,
    },
}

impl BetaInterval {
    pub const ALL: BetaInterval = BetaInterval::Range {
        lo: 0.0,
        hi: 10.0,
        lo_closed: true,
        hi_closed: true,
    };

    pub fn contains(&self, beta: f64) -> bool {
        match *self {
            BetaInterval::Empty => false,
            BetaInterval::Range {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => {
                let above = if lo_closed { beta >= lo } else { beta > lo };
                let below = if hi_closed { beta <= hi } else { beta < hi };
                above && below
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BetaInterval::Empty)
    }
}

impl fmt::Display for BetaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BetaInterval::Empty => f.write_str("∅"),
            BetaInterval::Range {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => write!(
                f,
                "{}{lo}, {hi}{}",
                if lo_closed { '[' } else { '(' },
                if hi_closed { ']' } else { ')' }
            ),
        }
    }
}

/// Solves `−9 + 3w + (10−β)z + xβ + yγ < 0` for `β ∈ [0, 10]`.
///
/// The numerator is affine in `β`, `c + kβ` with `k = x − z`, so the solution
/// set is a half-open interval anchored at one end of `[0, 10]`, the whole
/// range, or nothing.
pub fn detection_interval_beta(p: &MapParams, gamma: f64) -> BetaInterval {
    let constant = -9.0 + 3.0 * p.w() + 10.0 * p.z() + p.y() * gamma;
    let slope = p.x() - p.z();
    if slope == 0.0 {
        return if constant < 0.0 {
            BetaInterval::ALL
        } else {
            BetaInterval::Empty
        };
    }
    let root = -constant / slope;
    if slope > 0.0 {
        // β < root
        if root <= 0.0 {
            BetaInterval::Empty
        } else if root > 10.0 {
            BetaInterval::ALL
        } else {
            BetaInterval::Range {
                lo: 0.0,
                hi: root,
                lo_closed: true,
                hi_closed: false,
            }
        }
    } else {
        // β > root
        if root >= 10.0 {
            BetaInterval::Empty
        } else if root < 0.0 {
            BetaInterval::ALL
        } else {
            BetaInterval::Range {
                lo: root,
                hi: 10.0,
                lo_closed: false,
                hi_closed: true,
            }
        }
    }
}
