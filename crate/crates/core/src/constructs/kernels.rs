use super::decomposition::SignDecomposition;
use super::Sites;
use crate::eigen::{eigenvalue_sum_top, sturm_count, DenseSymmetric, EigenConfig};
use crate::perturbation::{truncate, Perturbation, TruncatedTridiagonal};
use crate::{Error, Result};

/// Decay target for resolvent columns: `μ^N < RESOLVENT_DECAY`.
const RESOLVENT_DECAY: f64 = 1e-12;

/// Sites with `b_n > 0`; errors if some `b_n < 0` or none is positive.
pub fn positive_sites(p: &Perturbation) -> Result<Vec<(i64, f64)>> {
    if let Some((n, b)) = p.sites().find(|&(_, b)| b < 0.0) {
        return Err(Error::Precondition(format!("b_{n} = {b} is negative")));
    }
    let sites: Vec<(i64, f64)> = p.sites().filter(|&(_, b)| b > 0.0).collect();
    if sites.is_empty() {
        return Err(Error::Precondition("no site with b_n > 0".into()));
    }
    Ok(sites)
}

/// Smallest `N` with `μ^N < 1e-12`, plus the support radius of `p`.
pub fn resolvent_half_width(p: &Perturbation, mu: f64) -> usize {
    let decay = (RESOLVENT_DECAY.ln() / mu.ln()).floor() as usize + 1;
    decay + p.support_radius()
}

/// LU factors of the tridiagonal `β - A` without pivoting; fine while
/// `β - A` is positive definite.
struct ShiftedHoppingLu {
    lo: i64,
    /// pivots `u_k`
    pivots: Vec<f64>,
    /// multipliers `l_k = -a_{k-1} / u_{k-1}`
    lower: Vec<f64>,
    off: Vec<f64>,
}

impl ShiftedHoppingLu {
    fn new(t: &TruncatedTridiagonal, beta: f64) -> Result<Self> {
        let off: Vec<f64> = t.offdiag().iter().map(|a| -a).collect();
        let n = t.dim();
        let mut pivots = Vec::with_capacity(n);
        let mut lower = Vec::with_capacity(n.saturating_sub(1));
        let mut u = beta;
        for k in 0..n {
            if k > 0 {
                let l = off[k - 1] / pivots[k - 1];
                lower.push(l);
                u = beta - l * off[k - 1];
            }
            if !(u.abs() > f64::MIN_POSITIVE) || !u.is_finite() {
                return Err(Error::Singular("resolvent solve"));
            }
            pivots.push(u);
        }
        Ok(ShiftedHoppingLu {
            lo: t.lo(),
            pivots,
            lower,
            off,
        })
    }

    /// Solve `(β - A) x = e_site`.
    fn solve_unit(&self, site: i64) -> Vec<f64> {
        let n = self.pivots.len();
        let idx = (site - self.lo) as usize;
        let mut y = vec![0.0; n];
        y[idx] = 1.0;
        for k in idx + 1..n {
            y[k] = -self.lower[k - 1] * y[k - 1];
        }
        let mut x = vec![0.0; n];
        x[n - 1] = y[n - 1] / self.pivots[n - 1];
        for k in (0..n - 1).rev() {
            x[k] = (y[k] - self.off[k] * x[k + 1]) / self.pivots[k];
        }
        x
    }
}

/// `K(A; β) = B^{1/2} (β - A)^{-1} B^{1/2}` restricted to the sites where
/// `b_n > 0`, with `A` the hopping part of `p` on `[-N, N]`.
pub fn birman_schwinger(p: &Perturbation, beta: f64, half_width: usize) -> Result<DenseSymmetric> {
    let sites = positive_sites(p)?;
    let hopping = Perturbation::hopping(p.a_offset(), p.a().to_vec())?;
    let a = truncate(&hopping, half_width.max(p.support_radius()))?;
    // β must sit above the whole spectrum of the truncated hopping part
    if sturm_count(&a, beta) < a.dim() {
        return Err(Error::Precondition(format!(
            "beta = {beta} does not dominate the hopping part"
        )));
    }
    let lu = ShiftedHoppingLu::new(&a, beta)?;
    let columns: Vec<Vec<f64>> = sites.iter().map(|&(n, _)| lu.solve_unit(n)).collect();
    let root: Vec<f64> = sites.iter().map(|&(_, b)| b.sqrt()).collect();
    Ok(DenseSymmetric::from_fn(sites.len(), |i, j| {
        let row = (sites[i].0 - a.lo()) as usize;
        root[i] * columns[j][row] * root[j]
    }))
}

/// `L_μ(A) = (β² - 4)^{1/2} K(A; β)` with `β = μ + 1/μ`, so the prefactor is
/// `1/μ - μ`.
pub fn l_mu(p: &Perturbation, mu: f64, half_width: usize) -> Result<DenseSymmetric> {
    check_mu(mu, false)?;
    let beta = mu + 1.0 / mu;
    Ok(birman_schwinger(p, beta, half_width)?.scaled(1.0 / mu - mu))
}

fn check_mu(mu: f64, allow_one: bool) -> Result<()> {
    let ok = mu > 0.0 && (mu < 1.0 || (allow_one && mu == 1.0));
    if !ok {
        let range = if allow_one { "(0, 1]" } else { "(0, 1)" };
        return Err(Error::Domain(format!("mu must lie in {range}, got {mu}")));
    }
    Ok(())
}

fn check_sites(sites: &Sites) -> Result<()> {
    if sites.is_empty() {
        return Err(Error::Precondition("empty site list".into()));
    }
    if let Some(&(n, b)) = sites.iter().find(|&&(_, b)| !(b > 0.0) || !b.is_finite()) {
        return Err(Error::Precondition(format!(
            "site {n} has b = {b}, need b > 0"
        )));
    }
    if sites.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::Precondition(
            "sites must be strictly ascending".into(),
        ));
    }
    Ok(())
}

/// `b_m^{1/2} μ^{|m-n|} b_n^{1/2}`; `μ = 1` gives the rank-one limit.
fn free_kernel(sites: &Sites, mu: f64) -> DenseSymmetric {
    DenseSymmetric::from_fn(sites.len(), |i, j| {
        let (m, bm) = sites[i];
        let (n, bn) = sites[j];
        let dist = (n - m).unsigned_abs();
        bm.sqrt() * mu.powi(dist as i32) * bn.sqrt()
    })
}

/// Closed form of `L_μ(A_1)` on the given sites.
pub fn l_mu_free_closed_form(sites: &Sites, mu: f64) -> Result<DenseSymmetric> {
    check_mu(mu, false)?;
    check_sites(sites)?;
    Ok(free_kernel(sites, mu))
}

/// `Σ_σ λ_σ D_σ 𝟙 D_σ` on the sites: entry `(m, n)` is the weighted mean of
/// the sign product `s_m s_n`. Averaging any kernel is the entrywise product
/// with this matrix.
pub fn sign_average(d: &SignDecomposition, sites: &Sites) -> DenseSymmetric {
    let idx: Vec<i64> = sites.iter().map(|&(n, _)| n).collect();
    let dim = idx.len();
    let mut acc = vec![0.0; dim * dim];
    for term in &d.terms {
        let s = d.site_signs(term, &idx);
        for i in 0..dim {
            for j in i..dim {
                acc[i * dim + j] += term.weight * s[i] * s[j];
            }
        }
    }
    DenseSymmetric::from_fn(dim, |i, j| acc[i * dim + j])
}

/// `Σ_σ λ_σ D_σ L_μ(A_1) D_σ` for `μ ∈ (0, 1]`.
pub fn averaged_l_mu(d: &SignDecomposition, sites: &Sites, mu: f64) -> Result<DenseSymmetric> {
    check_mu(mu, true)?;
    check_sites(sites)?;
    let w = sign_average(d, sites);
    let l = free_kernel(sites, mu);
    Ok(DenseSymmetric::from_fn(sites.len(), |i, j| {
        w[(i, j)] * l[(i, j)]
    }))
}

/// `S_n(μ)`: sum of the `n` largest eigenvalues of the averaged kernel at
/// each `μ` of the grid.
pub fn s_n_curve(d: &SignDecomposition, sites: &Sites, n: usize, mus: &[f64]) -> Result<Vec<f64>> {
    let cfg = EigenConfig::default();
    mus.iter()
        .map(|&mu| eigenvalue_sum_top(&averaged_l_mu(d, sites, mu)?, n, &cfg))
        .collect()
}
