use crate::TruncatedTridiagonal;

const PIVOT_FLOOR: f64 = 1e-300;

/// Number of eigenvalues of `t` strictly below `x`, from the signs of the
/// LDLᵀ pivots of `t - x`.
pub fn sturm_count(t: &TruncatedTridiagonal, x: f64) -> usize {
    let diag = t.diag();
    let off = t.offdiag();
    let norm = t.max_abs();
    let tiny = if norm > 0.0 {
        PIVOT_FLOOR * norm
    } else {
        PIVOT_FLOOR
    };

    let mut count = 0;
    let mut d = 0.0;
    for k in 0..diag.len() {
        d = if k == 0 {
            diag[0] - x
        } else {
            (diag[k] - x) - off[k - 1] * off[k - 1] / d
        };
        if d.abs() < tiny {
            d = if d.is_sign_negative() { -tiny } else { tiny };
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Bisect `[lo, hi]` down to adjacent floating-point numbers, moving the
/// left end whenever `go_right(mid)` holds. Returns the final midpoint.
pub fn bisect(mut lo: f64, mut hi: f64, mut go_right: impl FnMut(f64) -> bool) -> f64 {
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        if go_right(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perturbation::{truncate, Perturbation};

    #[test]
    fn free_three_by_three() {
        // eigenvalues 2cos(jπ/4): -√2, 0, √2
        let t = truncate(&Perturbation::free(), 1).unwrap();
        assert_eq!(sturm_count(&t, 1.0), 2);
        assert_eq!(sturm_count(&t, -3.0), 0);
        assert_eq!(sturm_count(&t, -1.0), 1);
        assert_eq!(sturm_count(&t, 1.5), 3);
        // exact hit on the zero eigenvalue is not "strictly below"
        assert_eq!(sturm_count(&t, 0.0), 1);
    }

    #[test]
    fn one_by_one() {
        let t = TruncatedTridiagonal::new(0, vec![5.0], vec![]).unwrap();
        assert_eq!(sturm_count(&t, 4.0), 0);
        assert_eq!(sturm_count(&t, 5.0), 0);
        assert_eq!(sturm_count(&t, 5.5), 1);
    }

    #[test]
    fn zero_matrix_survives_pivot_guard() {
        let t = TruncatedTridiagonal::new(0, vec![0.0; 4], vec![0.0; 3]).unwrap();
        assert_eq!(sturm_count(&t, 0.0), 0);
        assert_eq!(sturm_count(&t, 1e-3), 4);
    }

    #[test]
    fn bisect_finds_root() {
        let r = bisect(0.0, 2.0, |x| x * x < 2.0);
        assert!((r - 2f64.sqrt()).abs() < 4.0 * f64::EPSILON);
    }
}
