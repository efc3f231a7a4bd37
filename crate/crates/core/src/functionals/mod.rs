//! Scalar functionals of the discrete spectrum and of the perturbation:
//! eigenvalue sums, Riesz means, the Killip-Simon type `F` and `G`, the Beta
//! function, and the right-hand sides of the eigenvalue bounds.

pub mod quadrature;
mod special;

pub use special::{beta_fn, ln_gamma};

use quadrature::{integrate_left_power, GaussLegendre};
use serde::{Deserialize, Serialize};

use crate::eigen::SpectrumOutside;
use crate::perturbation::{sandwich, Perturbation};
use crate::{Error, Result};

fn pos(x: f64) -> f64 {
    x.max(0.0)
}

/// `√(E² - 4)` written as `√((|E| - 2)(|E| + 2))` to keep digits near the edge.
fn edge_root(e: f64) -> f64 {
    let a = e.abs();
    ((a - 2.0) * (a + 2.0)).sqrt()
}

/// Energy `e` outside `[-2, 2]` with its parametrisation `|e| = μ + 1/μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeParam {
    pub e: f64,
    pub mu: f64,
    pub beta: f64,
}

/// `μ ∈ (0, 1)` with `μ + 1/μ = |e|`.
pub fn mu_of_e(e: f64) -> Result<EdgeParam> {
    if !(e.abs() > 2.0) || !e.is_finite() {
        return Err(Error::Domain(format!("|e| must exceed 2, got {e}")));
    }
    let beta = e.abs();
    let mu = 2.0 / (beta + edge_root(beta));
    Ok(EdgeParam { e, mu, beta })
}

/// `Σ_j √(E_j⁺² - 4) + Σ_j √(E_j⁻² - 4)`.
pub fn lt_lhs_main(s: &SpectrumOutside) -> f64 {
    s.iter().map(edge_root).sum()
}

/// `Σ |b_n| + 4 Σ (a_n - 1)_+`.
pub fn rhs_main(p: &Perturbation) -> f64 {
    let b: f64 = p.b().iter().map(|v| v.abs()).sum();
    let a: f64 = p.a().iter().map(|&v| pos(v - 1.0)).sum();
    b + 4.0 * a
}

/// `Σ |b_n| + 4 Σ |a_n - 1|`.
pub fn rhs_hs(p: &Perturbation) -> f64 {
    let b: f64 = p.b().iter().map(|v| v.abs()).sum();
    let a: f64 = p.a().iter().map(|&v| (v - 1.0).abs()).sum();
    b + 4.0 * a
}

/// `F(E) = β² - β⁻² - ln β²` with `|E| = β + 1/β`, `β > 1`.
pub fn ks_f(e: f64) -> Result<f64> {
    if !(e.abs() > 2.0) {
        return Err(Error::Domain(format!("F needs |e| > 2, got {e}")));
    }
    let beta = 0.5 * (e.abs() + edge_root(e));
    Ok(beta * beta - 1.0 / (beta * beta) - (beta * beta).ln())
}

/// `G(a) = a² - 1 - ln a²`.
pub fn ks_g(a: f64) -> Result<f64> {
    if a == 0.0 || !a.is_finite() {
        return Err(Error::Domain(format!(
            "G needs a finite non-zero argument, got {a}"
        )));
    }
    Ok(a * a - 1.0 - (a * a).ln())
}

/// `G(a)`, with the pole at `a = 0` mapped to `+∞`.
fn ks_g_or_inf(a: f64) -> f64 {
    ks_g(a).unwrap_or(f64::INFINITY)
}

/// `Σ_j F(E_j⁺) + F(E_j⁻)`.
pub fn ks_lhs(s: &SpectrumOutside) -> f64 {
    s.iter()
        .map(|e| ks_f(e).expect("spectrum lies outside [-2, 2]"))
        .sum()
}

/// `Σ b_n² + 2 Σ G(a_n)²`, read literally.
pub fn ks_rhs_squared(p: &Perturbation) -> f64 {
    let b: f64 = p.b().iter().map(|v| v * v).sum();
    let g: f64 = p.a().iter().map(|&a| ks_g_or_inf(a).powi(2)).sum();
    b + 2.0 * g
}

/// `Σ b_n² + 2 Σ G(a_n)`.
pub fn ks_rhs_unsquared(p: &Perturbation) -> f64 {
    let b: f64 = p.b().iter().map(|v| v * v).sum();
    let g: f64 = p.a().iter().map(|&a| ks_g_or_inf(a)).sum();
    b + 2.0 * g
}

/// Exponent `γ` and quadrature resolution for Riesz means.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszConfig {
    pub quad_points: usize,
    pub subdivisions: usize,
    pub gamma: f64,
}

impl RieszConfig {
    pub fn new(gamma: f64) -> Self {
        RieszConfig {
            quad_points: 64,
            subdivisions: 8,
            gamma,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_gamma(self.gamma)?;
        if self.quad_points < 8 || self.subdivisions == 0 {
            return Err(Error::Domain(format!(
                "need quad_points >= 8 and subdivisions >= 1, got {self:?}"
            )));
        }
        Ok(())
    }
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !(gamma > 0.5) || !gamma.is_finite() {
        return Err(Error::Domain(format!("gamma must exceed 1/2, got {gamma}")));
    }
    Ok(())
}

/// `∫_2^{|e|} (t² - 4)^{1/2} (|e| - t)^{γ - 3/2} dt`.
///
/// With `u = |e| - t` the integrand is `f(u) u^α`, `α = γ - 3/2`, and
/// `f(u) = √((|e| - u)² - 4)` has a square-root zero at `u = |e| - 2`. The
/// interval is split in half: the lower half takes the power substitution of
/// [`quadrature::power_substitution`], the upper half `u = c - w²`, after
/// which both integrands are smooth.
pub fn riesz_mean(e: f64, cfg: &RieszConfig) -> Result<f64> {
    cfg.validate()?;
    if !(e.abs() > 2.0) || !e.is_finite() {
        return Err(Error::Domain(format!("|e| must exceed 2, got {e}")));
    }
    let big_e = e.abs();
    let c = big_e - 2.0;
    let alpha = cfg.gamma - 1.5;
    let rule = GaussLegendre::new(cfg.quad_points);
    let half = 0.5 * c;

    let f = |u: f64| {
        let t = big_e - u;
        pos((t - 2.0) * (t + 2.0)).sqrt()
    };
    let lower = integrate_left_power(&rule, cfg.subdivisions, alpha, half, f);
    let upper = rule.integrate_panels(0.0, half.sqrt(), cfg.subdivisions, |w| {
        let w2 = w * w;
        2.0 * w2 * (4.0 + w2).sqrt() * (c - w2).powf(alpha)
    });
    Ok(lower + upper)
}

/// Which half of the spectrum, and which sign branch of the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// `Σ_j` of [`riesz_mean`] over `E_j⁺` (`Plus`) or `E_j⁻` (`Minus`).
pub fn riesz_lhs(s: &SpectrumOutside, sign: Sign, cfg: &RieszConfig) -> Result<f64> {
    let values = match sign {
        Sign::Plus => &s.e_plus,
        Sign::Minus => &s.e_minus,
    };
    values.iter().map(|&e| riesz_mean(e, cfg)).sum()
}

/// `B(γ - 1/2, 2) Σ_n (b̃_n^±)^{γ + 1/2}` with
/// `b̃_n^± = [b_n]_± + (a_{n-1} - 1)_+ + (a_n - 1)_+`, the diagonal of the
/// sandwich operator `J̃^±` in absolute value.
pub fn riesz_rhs(p: &Perturbation, gamma: f64, sign: Sign) -> Result<f64> {
    check_gamma(gamma)?;
    if let Some((n, a)) = p.bonds().find(|&(_, a)| a < 0.0) {
        return Err(Error::Precondition(format!("a_{n} = {a} is negative")));
    }
    let s = sandwich(p);
    let diag = match sign {
        Sign::Plus => s.plus.b().to_vec(),
        Sign::Minus => s.minus.b().iter().map(|v| -v).collect(),
    };
    let sum: f64 = diag.iter().map(|&v| pos(v).powf(gamma + 0.5)).sum();
    Ok(beta_fn(gamma - 0.5, 2.0)? * sum)
}

/// `∫_0^∞ (c - s)_+ s^{γ - 3/2} ds` by quadrature; equals
/// `B(γ - 1/2, 2) c^{γ + 1/2}`, the weight picked up when a Riesz mean is
/// written as an integral over potential shifts `s`.
pub fn layer_cake_integral(c: f64, cfg: &RieszConfig) -> Result<f64> {
    cfg.validate()?;
    if !(c >= 0.0) || !c.is_finite() {
        return Err(Error::Domain(format!(
            "c must be finite and non-negative, got {c}"
        )));
    }
    let rule = GaussLegendre::new(cfg.quad_points);
    Ok(integrate_left_power(
        &rule,
        cfg.subdivisions,
        cfg.gamma - 1.5,
        c,
        |s| c - s,
    ))
}

/// Lower bounds for one Riesz mean:
/// `(2B(γ-1/2, 3/2)(|e|-2)^γ, B(γ-1/2, 2)(|e|-2)^{γ+1/2})`.
pub fn remark_lower_bounds(e: f64, gamma: f64) -> Result<(f64, f64)> {
    check_gamma(gamma)?;
    if !(e.abs() > 2.0) {
        return Err(Error::Domain(format!("|e| must exceed 2, got {e}")));
    }
    let d = e.abs() - 2.0;
    Ok((
        2.0 * beta_fn(gamma - 0.5, 1.5)? * d.powf(gamma),
        beta_fn(gamma - 0.5, 2.0)? * d.powf(gamma + 0.5),
    ))
}
