use alloc::vec::Vec;

use super::{ComplexMatrix, C64};

/// A principal minor: the determinant of the submatrix keeping the rows and
/// columns in `indices` (0-based, ascending).
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalMinor {
    pub indices: Vec<usize>,
    pub value: f64,
}

/// Determinant by LU decomposition with partial pivoting.
pub fn determinant(m: &ComplexMatrix) -> C64 {
    let n = m.dim();
    let mut a = m.clone();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
            .unwrap_or(col);
        if a[(pivot, col)].norm() == 0.0 {
            return C64::new(0.0, 0.0);
        }
        if pivot != col {
            for k in 0..n {
                let tmp = a[(col, k)];
                a[(col, k)] = a[(pivot, k)];
                a[(pivot, k)] = tmp;
            }
            det = -det;
        }
        let p = a[(col, col)];
        det *= p;
        for r in (col + 1)..n {
            let factor = a[(r, col)] / p;
            if factor == C64::new(0.0, 0.0) {
                continue;
            }
            for k in col..n {
                let sub = factor * a[(col, k)];
                a[(r, k)] -= sub;
            }
        }
    }
    det
}

/// All `2^n − 1` principal minors of a Hermitian matrix, ordered by subset
/// size and then lexicographically.
///
/// For Hermitian input each determinant is real up to round-off; only the
/// real part is kept.
pub fn principal_minors(m: &ComplexMatrix) -> Vec<PrincipalMinor> {
    let n = m.dim();
    let mut out = Vec::with_capacity((1usize << n).saturating_sub(1));
    for size in 1..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let det = determinant(&m.principal_submatrix(&subset));
            out.push(PrincipalMinor {
                indices: subset.clone(),
                value: det.re,
            });
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    out
}

fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_minors_are_one() {
        let minors = principal_minors(&ComplexMatrix::identity(4));
        assert_eq!(minors.len(), 15);
        assert!(minors.iter().all(|m| (m.value - 1.0).abs() < 1e-15));
    }

    #[test]
    fn diagonal_minors_are_products() {
        let minors = principal_minors(&ComplexMatrix::diag(&[1.0, 2.0, 3.0, 4.0]));
        let pick = |idx: &[usize]| minors.iter().find(|m| m.indices == idx).unwrap().value;
        // {1,3} in 1-based labels
        assert_eq!(pick(&[0, 2]), 3.0);
        assert_eq!(pick(&[1, 2, 3]), 24.0);
        assert_eq!(pick(&[0, 1, 2, 3]), 24.0);
        assert_eq!(minors[0].indices, [0]);
        assert_eq!(minors[4].indices, [0, 1]);
    }

    #[test]
    fn rank_one_minors_vanish_above_order_one() {
        let v = [
            C64::new(0.3, 0.1),
            C64::new(-0.7, 0.2),
            C64::new(0.5, -0.4),
            C64::new(0.1, 0.9),
        ];
        let m = ComplexMatrix::outer(&v);
        for minor in principal_minors(&m) {
            if minor.indices.len() >= 2 {
                assert!(minor.value.abs() < 1e-10, "{minor:?}");
            }
        }
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = ComplexMatrix::from_real(3, &[0.0, 2.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 3.0]).unwrap();
        // expansion along the second row: -1·(2·3 − 1·1)
        assert!((determinant(&m) - C64::new(-5.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn combination_count() {
        let minors = principal_minors(&ComplexMatrix::identity(5));
        assert_eq!(minors.len(), 31);
    }
}
