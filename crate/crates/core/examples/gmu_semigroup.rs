//! The density `g_μ(k) ∝ (1/μ - μ)/(1/μ + μ - 2 cos k)`: its Fourier
//! coefficients are `μ^{|n|}`, so convolving `g_ν` with `g_{μ/ν}` gives
//! `g_μ`.
//!
//! ```bash
//! cargo run -p jacobi-lt --example gmu_semigroup
//! ```

use std::f64::consts::PI;

use jacobi_lt::constructs::{convolve_g, fourier_g, g_mu_eval, GmuDensity};

pub fn main() {
    let g = GmuDensity::new(0.5).unwrap();
    for n in 0..=6 {
        let c = fourier_g(&g, n);
        println!(
            "n = {n}: coefficient {c:.15}  (0.5^n = {})",
            0.5f64.powi(n as i32)
        );
        assert!((c - 0.5f64.powi(n as i32)).abs() < 1e-10);
    }

    let (mu, nu) = (0.35, 0.7);
    let target = GmuDensity::new(mu).unwrap();
    let outer = GmuDensity::new(nu).unwrap();
    let inner = GmuDensity::new(mu / nu).unwrap();
    let mut worst = 0.0f64;
    for i in 0..64 {
        let k = -PI + 2.0 * PI * i as f64 / 64.0;
        let conv = convolve_g(&outer, &inner, k);
        worst = worst.max((conv - g_mu_eval(&target, k) / (2.0 * PI).sqrt()).abs());
    }
    println!(
        "g_{nu} * g_{} vs g_{mu}: max deviation {worst:.2e}",
        mu / nu
    );
    assert!(worst < 1e-8);
}
