use super::EigenConfig;
use crate::{Error, Result, TruncatedTridiagonal};

const MAX_SWEEPS: usize = 64;

/// Small dense real symmetric matrix, row-major. Every constructor fills the
/// upper triangle and mirrors it, so `m[(i, j)] == m[(j, i)]` bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetric {
    dim: usize,
    data: Vec<f64>,
}

impl DenseSymmetric {
    /// Build from `f(i, j)` evaluated for `i <= j`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                data[i * dim + j] = v;
                data[j * dim + i] = v;
            }
        }
        DenseSymmetric { dim, data }
    }

    /// Build from rows; rejects ragged, non-finite or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("rows must form a non-empty square".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::Domain(format!("entry ({i}, {j}) is not finite")));
                }
                if v != rows[j][i] {
                    return Err(Error::Domain(format!("entry ({i}, {j}) breaks symmetry")));
                }
            }
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j]))
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    pub fn from_tridiagonal(t: &TruncatedTridiagonal) -> Self {
        let (d, e) = (t.diag(), t.offdiag());
        Self::from_fn(t.dim(), |i, j| match j - i {
            0 => d[i],
            1 => e[i],
            _ => 0.0,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.dim).map(<[f64]>::to_vec).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: f64, other: &Self, beta: f64) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| {
            alpha * self.get(i, j) + beta * other.get(i, j)
        })
    }

    pub fn scaled(&self, alpha: f64) -> Self {
        Self::from_fn(self.dim, |i, j| alpha * self.get(i, j))
    }

    /// `D M D` for the diagonal `D = diag(signs)`.
    pub fn conjugate_diagonal(&self, signs: &[f64]) -> Self {
        assert_eq!(signs.len(), self.dim);
        Self::from_fn(self.dim, |i, j| signs[i] * self.get(i, j) * signs[j])
    }

    /// `scalar * I - self`.
    pub fn shifted_negative(&self, scalar: f64) -> Self {
        Self::from_fn(self.dim, |i, j| {
            let v = -self.get(i, j);
            if i == j {
                scalar + v
            } else {
                v
            }
        })
    }
}

impl std::ops::Index<(usize, usize)> for DenseSymmetric {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

/// Eigenvalues (ascending) and orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

impl SymmetricEigen {
    /// `V f(Λ) Vᵀ`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> DenseSymmetric {
        let n = self.values.len();
        let fv: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        DenseSymmetric::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.vectors[k][i] * fv[k] * self.vectors[k][j])
                .sum()
        })
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below
/// `dense_tol` times the Frobenius norm of `m`.
pub fn dense_eigen(m: &DenseSymmetric, cfg: &EigenConfig) -> Result<SymmetricEigen> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    let mut a = m.rows();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let threshold = cfg.dense_tol * m.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
                #[allow(clippy::needless_range_loop)] // rows p and q are updated together
                for k in 0..n {
                    let (x, y) = (a[p][k], a[q][k]);
                    a[p][k] = c * x - s * y;
                    a[q][k] = s * x + c * y;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
            }
        }
    }
    let residual = off_norm(&a);
    if residual > threshold {
        return Err(Error::DenseNotConverged {
            sweeps: MAX_SWEEPS,
            off_norm: residual,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    Ok(SymmetricEigen {
        values: order.iter().map(|&k| a[k][k]).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|i| v[i][k]).collect())
            .collect(),
    })
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

/// All eigenvalues in ascending order.
pub fn dense_eigenvalues(m: &DenseSymmetric, cfg: &EigenConfig) -> Result<Vec<f64>> {
    Ok(dense_eigen(m, cfg)?.values)
}

fn check_rank(n: usize, dim: usize) -> Result<()> {
    if n == 0 || n > dim {
        return Err(Error::Domain(format!("n = {n} must lie in 1..={dim}")));
    }
    Ok(())
}

/// Ky-Fan `n`-norm: sum of the `n` largest singular values, which for a
/// symmetric matrix are the absolute eigenvalues.
pub fn kyfan(m: &DenseSymmetric, n: usize, cfg: &EigenConfig) -> Result<f64> {
    check_rank(n, m.dim())?;
    let mut s: Vec<f64> = dense_eigenvalues(m, cfg)?
        .into_iter()
        .map(f64::abs)
        .collect();
    s.sort_by(|x, y| y.total_cmp(x));
    Ok(s[..n].iter().sum())
}

/// Sum of the `n` largest (signed) eigenvalues.
pub fn eigenvalue_sum_top(m: &DenseSymmetric, n: usize, cfg: &EigenConfig) -> Result<f64> {
    check_rank(n, m.dim())?;
    let values = dense_eigenvalues(m, cfg)?;
    Ok(values.iter().rev().take(n).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EigenConfig {
        EigenConfig::default()
    }

    fn assert_vec_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn two_by_two_swap() {
        let m = DenseSymmetric::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_vec_close(&dense_eigenvalues(&m, &cfg()).unwrap(), &[-1.0, 1.0], 1e-14);
    }

    #[test]
    fn diagonal_is_already_solved() {
        let m = DenseSymmetric::diagonal(&[3.0, 2.0]);
        assert_eq!(dense_eigenvalues(&m, &cfg()).unwrap(), vec![2.0, 3.0]);
    }

    #[test]
    fn free_three_by_three() {
        let s = std::f64::consts::SQRT_2;
        let m = DenseSymmetric::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
        ])
        .unwrap();
        assert_vec_close(
            &dense_eigenvalues(&m, &cfg()).unwrap(),
            &[-s, 0.0, s],
            1e-14,
        );
    }

    #[test]
    fn eigenvectors_reconstruct_the_matrix() {
        let m = DenseSymmetric::from_fn(5, |i, j| {
            1.0 / (1.0 + i as f64 + j as f64) - 0.1 * (i * j) as f64
        });
        let eig = dense_eigen(&m, &cfg()).unwrap();
        assert!(eig.apply(|x| x).max_abs_diff(&m) < 1e-13);
        for a in &eig.vectors {
            for b in &eig.vectors {
                let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                let want = if std::ptr::eq(a, b) { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn zero_and_one_by_one() {
        assert_eq!(
            dense_eigenvalues(&DenseSymmetric::diagonal(&[0.0; 3]), &cfg()).unwrap(),
            vec![0.0; 3]
        );
        assert_eq!(
            dense_eigenvalues(&DenseSymmetric::diagonal(&[-4.0]), &cfg()).unwrap(),
            vec![-4.0]
        );
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(DenseSymmetric::from_rows(&[vec![0.0, 1.0], vec![1.5, 0.0]]).is_err());
        assert!(DenseSymmetric::from_rows(&[vec![0.0, 1.0]]).is_err());
        assert!(DenseSymmetric::from_rows(&[vec![f64::NAN]]).is_err());
    }

    #[test]
    fn kyfan_examples() {
        let m = DenseSymmetric::diagonal(&[3.0, 1.0, -2.0]);
        assert_eq!(kyfan(&m, 2, &cfg()).unwrap(), 5.0);
        assert_eq!(kyfan(&m, 1, &cfg()).unwrap(), 3.0);
        assert_eq!(kyfan(&DenseSymmetric::identity(2), 2, &cfg()).unwrap(), 2.0);
        assert!(kyfan(&m, 4, &cfg()).is_err());
        assert!(kyfan(&m, 0, &cfg()).is_err());
    }

    #[test]
    fn top_sum_examples() {
        let m = DenseSymmetric::diagonal(&[3.0, 1.0, -2.0]);
        assert_eq!(eigenvalue_sum_top(&m, 2, &cfg()).unwrap(), 4.0);
        assert_eq!(eigenvalue_sum_top(&m, 3, &cfg()).unwrap(), 2.0);
        let m = DenseSymmetric::from_rows(&[vec![1.0, 0.5], vec![0.5, 1.0]]).unwrap();
        assert!((eigenvalue_sum_top(&m, 1, &cfg()).unwrap() - 1.5).abs() < 1e-15);
        assert!(eigenvalue_sum_top(&m, 3, &cfg()).is_err());
    }
}
