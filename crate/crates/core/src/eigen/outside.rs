use serde::Serialize;

use super::sturm::{bisect, sturm_count};
use super::EigenConfig;
use crate::perturbation::{truncate, Perturbation, TruncatedTridiagonal};
use crate::{Error, Result};

/// Discrete eigenvalues above `2` (`e_plus`, descending) and below `-2`
/// (`e_minus`, ascending) of a perturbed Jacobi operator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumOutside {
    pub e_plus: Vec<f64>,
    pub e_minus: Vec<f64>,
    /// Truncation half-width of the final finite section.
    pub n_used: usize,
    /// Largest eigenvalue movement over the last doubling.
    pub est_error: f64,
    pub edge_buffer: f64,
}

impl SpectrumOutside {
    /// Wrap known eigenvalues, e.g. closed forms. Lists are sorted into the
    /// canonical order.
    pub fn from_values(mut e_plus: Vec<f64>, mut e_minus: Vec<f64>) -> Self {
        e_plus.sort_by(|x, y| y.total_cmp(x));
        e_minus.sort_by(f64::total_cmp);
        SpectrumOutside {
            e_plus,
            e_minus,
            n_used: 0,
            est_error: 0.0,
            edge_buffer: 0.0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.e_plus.is_empty() && self.e_minus.is_empty()
    }

    /// All eigenvalues, `e_plus` then `e_minus`.
    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.e_plus.iter().chain(&self.e_minus).copied()
    }
}

/// Eigenvalues of a finite section beyond `±(2 + edge)`: `(plus, minus)`
/// with `plus` descending and `minus` ascending.
pub fn truncated_outside(t: &TruncatedTridiagonal, edge: f64) -> (Vec<f64>, Vec<f64>) {
    let dim = t.dim();
    let (lower, upper) = t.gershgorin();
    let (lower, upper) = (lower - 1.0, upper + 1.0);
    let top = 2.0 + edge;
    let bottom = -top;

    let n_plus = dim - sturm_count(t, top).min(dim);
    let plus = (1..=n_plus)
        .map(|j| bisect(top, upper, |x| dim - sturm_count(t, x) >= j))
        .collect();
    let n_minus = sturm_count(t, bottom);
    let minus = (1..=n_minus)
        .map(|j| bisect(lower, bottom, |x| sturm_count(t, x) < j))
        .collect();
    (plus, minus)
}

/// `μ ∈ (0, 1)` with `μ + 1/μ = |x|`, the decay rate of the free Green's
/// function at energy `x`.
fn decay_rate(x: f64) -> f64 {
    let e = x.abs();
    // 2 / (e + √(e²-4)) avoids cancellation near the edge
    2.0 / (e + (e * e - 4.0).sqrt())
}

/// Exact number of eigenvalues of the infinite operator above `x > 2`.
///
/// The free exterior half-lines are eliminated by a Schur complement: with
/// the support window `W`, the count equals the number of eigenvalues of
/// `J_W + μ(x)(e_first e_firstᵀ + e_last e_lastᵀ)` above `x`.
pub fn boundary_closed_count_above(p: &Perturbation, x: f64) -> usize {
    debug_assert!(x > 2.0);
    let t = truncate(p, p.support_radius())
        .expect("support radius covers the support")
        .with_end_shift(decay_rate(x));
    t.dim() - sturm_count(&t, x)
}

/// Exact number of eigenvalues of the infinite operator below `x < -2`.
pub fn boundary_closed_count_below(p: &Perturbation, x: f64) -> usize {
    debug_assert!(x < -2.0);
    let t = truncate(p, p.support_radius())
        .expect("support radius covers the support")
        .with_end_shift(-decay_rate(x));
    sturm_count(&t, x)
}

/// Eigenvalues beyond `±(2 + edge)` of the infinite operator, bisected on the
/// boundary-closed counts. Independent of any truncation length.
pub fn boundary_closed_eigenvalues(p: &Perturbation, edge: f64) -> (Vec<f64>, Vec<f64>) {
    let t = truncate(p, p.support_radius()).expect("support radius covers the support");
    let (lower, upper) = t.gershgorin();
    let upper = upper.max(2.0) + 1.0;
    let lower = lower.min(-2.0) - 1.0;
    let top = 2.0 + edge;

    let n_plus = boundary_closed_count_above(p, top);
    let plus = (1..=n_plus)
        .map(|j| bisect(top, upper, |x| boundary_closed_count_above(p, x) >= j))
        .collect();
    let n_minus = boundary_closed_count_below(p, -top);
    let minus = (1..=n_minus)
        .map(|j| bisect(lower, -top, |x| boundary_closed_count_below(p, x) < j))
        .collect();
    (plus, minus)
}

fn max_movement(prev: &[f64], cur: &[f64]) -> f64 {
    if prev.len() != cur.len() {
        return f64::INFINITY;
    }
    prev.iter()
        .zip(cur)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Discrete eigenvalues of the infinite operator outside `[-2 - δ, 2 + δ]`.
///
/// Finite sections `[-N, N]` are bisected with Sturm counts, doubling `N`
/// from `support_radius + 32` until no eigenvalue moves by more than
/// `bisect_tol`. Eigenvalues of nested sections increase towards the true
/// ones, so a section can miss a bound state that has not yet surfaced above
/// `2 + δ`; the doubling also continues until the number of reported values
/// matches the exact count from [`boundary_closed_count_above`] and
/// [`boundary_closed_count_below`].
pub fn eigenvalues_outside(p: &Perturbation, cfg: &EigenConfig) -> Result<SpectrumOutside> {
    cfg.validate()?;
    let edge = cfg.edge_buffer;
    let want_plus = boundary_closed_count_above(p, 2.0 + edge);
    let want_minus = boundary_closed_count_below(p, -2.0 - edge);

    let mut half_width = (p.support_radius() + 32).min(cfg.max_half_width.max(p.support_radius()));
    let mut previous: Option<(Vec<f64>, Vec<f64>)> = None;
    loop {
        let t = truncate(p, half_width)?;
        let (plus, minus) = truncated_outside(&t, edge);
        let movement = match &previous {
            Some((pp, pm)) => max_movement(pp, &plus).max(max_movement(pm, &minus)),
            None => f64::INFINITY,
        };
        let complete = plus.len() == want_plus && minus.len() == want_minus;
        let result = SpectrumOutside {
            e_plus: plus,
            e_minus: minus,
            n_used: half_width,
            est_error: movement,
            edge_buffer: edge,
        };
        if complete && movement < cfg.bisect_tol {
            return Ok(result);
        }
        if half_width >= cfg.max_half_width {
            return Err(Error::NotConverged {
                max_half_width: cfg.max_half_width,
                partial: Box::new(result),
            });
        }
        half_width = (2 * half_width).min(cfg.max_half_width);
        previous = Some((result.e_plus, result.e_minus));
    }
}
