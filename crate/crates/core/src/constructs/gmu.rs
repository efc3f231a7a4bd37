use std::f64::consts::PI;

use crate::functionals::quadrature::GaussLegendre;
use crate::{Error, Result};

const PANELS: usize = 64;
const NODES: usize = 20;

/// The Poisson-type density
/// `g_μ(k) = (2π)^{-1/2} (1/μ - μ) / (1/μ + μ - 2 cos k)` on `[-π, π]`,
/// whose Fourier coefficients are `μ^{|n|}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GmuDensity {
    mu: f64,
}

impl GmuDensity {
    pub fn new(mu: f64) -> Result<Self> {
        if !(mu > 0.0 && mu < 1.0) {
            return Err(Error::Domain(format!("mu must lie in (0, 1), got {mu}")));
        }
        Ok(GmuDensity { mu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

pub fn g_mu_eval(g: &GmuDensity, k: f64) -> f64 {
    let mu = g.mu;
    (1.0 / mu - mu) / ((2.0 * PI).sqrt() * (1.0 / mu + mu - 2.0 * k.cos()))
}

fn periodic_integral(f: impl FnMut(f64) -> f64) -> f64 {
    GaussLegendre::new(NODES).integrate_panels(-PI, PI, PANELS, f)
}

/// `(ĝ_μ)_n = (2π)^{-1/2} ∫_{-π}^{π} e^{ink} g_μ(k) dk` by composite
/// Gauss-Legendre. `g_μ` is even, so only the cosine part survives.
pub fn fourier_g(g: &GmuDensity, n: i64) -> f64 {
    let n = n as f64;
    periodic_integral(|k| (n * k).cos() * g_mu_eval(g, k)) / (2.0 * PI).sqrt()
}

/// `∫_{-π}^{π} g_ν(k - k')/√(2π) · g_ρ(k')/√(2π) dk'`, periodic convolution
/// of the normalised densities.
pub fn convolve_g(nu: &GmuDensity, rho: &GmuDensity, k: f64) -> f64 {
    periodic_integral(|kp| g_mu_eval(nu, k - kp) * g_mu_eval(rho, kp)) / (2.0 * PI)
}
