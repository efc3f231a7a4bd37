use crate::eigen::{dense_eigen, dense_eigenvalues, kyfan, DenseSymmetric, EigenConfig};
use crate::{Error, Result};

/// `(β - X)^{-1}` via the eigendecomposition of `X`; `β` must exceed every
/// eigenvalue.
fn shifted_inverse(x: &DenseSymmetric, beta: f64, cfg: &EigenConfig) -> Result<DenseSymmetric> {
    let eig = dense_eigen(x, cfg)?;
    let top = *eig.values.last().expect("non-empty");
    if !(beta > top) {
        return Err(Error::Precondition(format!(
            "beta = {beta} does not dominate top eigenvalue {top}"
        )));
    }
    Ok(eig.apply(|l| 1.0 / (beta - l)))
}

/// Smallest eigenvalue of
/// `λ(β - X₁)^{-1} + (1 - λ)(β - X₂)^{-1} - (β - λX₁ - (1 - λ)X₂)^{-1}`,
/// non-negative by operator convexity of `X ↦ (β - X)^{-1}`.
pub fn operator_convexity_gap(
    x1: &DenseSymmetric,
    x2: &DenseSymmetric,
    beta: f64,
    lam: f64,
    cfg: &EigenConfig,
) -> Result<f64> {
    if x1.dim() != x2.dim() {
        return Err(Error::Dimension(format!("{} vs {}", x1.dim(), x2.dim())));
    }
    if !(0.0..=1.0).contains(&lam) {
        return Err(Error::Domain(format!(
            "lambda must lie in [0, 1], got {lam}"
        )));
    }
    let r1 = shifted_inverse(x1, beta, cfg)?;
    let r2 = shifted_inverse(x2, beta, cfg)?;
    let mixed = shifted_inverse(&x1.combine(lam, x2, 1.0 - lam), beta, cfg)?;
    let gap = r1.combine(lam, &r2, 1.0 - lam).combine(1.0, &mixed, -1.0);
    Ok(dense_eigenvalues(&gap, cfg)?[0])
}

/// `(‖Σ_j w_j D_j T D_j‖_n, ‖T‖_n)` for a PSD `T` and a convex combination of
/// `±1` diagonal conjugations.
pub fn kyfan_averaging_check(
    t: &DenseSymmetric,
    conjugators: &[(f64, Vec<f64>)],
    n: usize,
    cfg: &EigenConfig,
) -> Result<(f64, f64)> {
    let dim = t.dim();
    if conjugators.is_empty() {
        return Err(Error::Precondition("no conjugators".into()));
    }
    let total: f64 = conjugators.iter().map(|(w, _)| w).sum();
    if conjugators.iter().any(|(w, _)| *w < 0.0) || (total - 1.0).abs() > 1e-12 {
        return Err(Error::Precondition(
            "weights must form a probability vector".into(),
        ));
    }
    for (_, d) in conjugators {
        if d.len() != dim || d.iter().any(|&s| s != 1.0 && s != -1.0) {
            return Err(Error::Precondition(
                "conjugators must be ±1 diagonals of matching size".into(),
            ));
        }
    }
    let lowest = dense_eigenvalues(t, cfg)?[0];
    if lowest < -1e-12 * t.frobenius_norm().max(1.0) {
        return Err(Error::Precondition(format!(
            "T is not PSD (eigenvalue {lowest})"
        )));
    }
    let mut avg = DenseSymmetric::from_fn(dim, |_, _| 0.0);
    for (w, d) in conjugators {
        avg = avg.combine(1.0, &t.conjugate_diagonal(d), *w);
    }
    Ok((kyfan(&avg, n, cfg)?, kyfan(t, n, cfg)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EigenConfig {
        EigenConfig::default()
    }

    #[test]
    fn identical_arguments_have_no_gap() {
        let x = DenseSymmetric::from_rows(&[vec![0.3, 0.1], vec![0.1, -0.2]]).unwrap();
        assert!(
            operator_convexity_gap(&x, &x, 2.0, 0.3, &cfg())
                .unwrap()
                .abs()
                < 1e-14
        );
    }

    #[test]
    fn scalar_gap() {
        let x1 = DenseSymmetric::diagonal(&[0.0]);
        let x2 = DenseSymmetric::diagonal(&[1.0]);
        let gap = operator_convexity_gap(&x1, &x2, 2.0, 0.5, &cfg()).unwrap();
        assert!((gap - (0.75 - 2.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn beta_must_dominate() {
        let x1 = DenseSymmetric::diagonal(&[0.0, 3.0]);
        let x2 = DenseSymmetric::diagonal(&[1.0, 0.0]);
        assert!(matches!(
            operator_convexity_gap(&x1, &x2, 2.0, 0.5, &cfg()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn kyfan_averaging_examples() {
        let t = DenseSymmetric::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let single = [(1.0, vec![1.0, -1.0])];
        let (avg, orig) = kyfan_averaging_check(&t, &single, 1, &cfg()).unwrap();
        assert!((avg - orig).abs() < 1e-14);

        let pair = [(0.5, vec![1.0, 1.0]), (0.5, vec![1.0, -1.0])];
        let (avg, orig) = kyfan_averaging_check(&t, &pair, 1, &cfg()).unwrap();
        assert!((avg - 1.0).abs() < 1e-14 && (orig - 2.0).abs() < 1e-14);
        let (avg, orig) = kyfan_averaging_check(&t, &pair, 2, &cfg()).unwrap();
        assert!((avg - 2.0).abs() < 1e-14 && (orig - 2.0).abs() < 1e-14);
    }

    #[test]
    fn kyfan_averaging_rejects_bad_input() {
        let t = DenseSymmetric::identity(2);
        assert!(kyfan_averaging_check(&t, &[(0.7, vec![1.0, 1.0])], 1, &cfg()).is_err());
        assert!(kyfan_averaging_check(&t, &[(1.0, vec![1.0, 0.5])], 1, &cfg()).is_err());
        let indefinite = DenseSymmetric::diagonal(&[1.0, -1.0]);
        assert!(kyfan_averaging_check(&indefinite, &[(1.0, vec![1.0, 1.0])], 1, &cfg()).is_err());
    }
}
