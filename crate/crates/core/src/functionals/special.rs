//! Log-gamma and Beta functions.

use statrs::function::{beta, gamma};

use crate::{Error, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    gamma::ln_gamma(x)
}

/// `B(x, y) = Γ(x)Γ(y)/Γ(x+y)`.
pub fn beta_fn(x: f64, y: f64) -> Result<f64> {
    beta::checked_beta(x, y)
        .map_err(|_| Error::Domain(format!("Beta needs positive arguments, got ({x}, {y})")))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn factorials() {
        let mut fact = 1.0f64;
        for n in 1..=20 {
            // Γ(n) = (n-1)!
            assert!(
                (ln_gamma(n as f64) - fact.ln()).abs() < 1e-13 * fact.ln().abs().max(1.0),
                "n = {n}"
            );
            fact *= n as f64;
        }
    }

    #[test]
    fn half_integers() {
        // Γ(n + 1/2) = (2n)! √π / (4^n n!)
        let mut value = PI.sqrt();
        for n in 0..15 {
            let x = n as f64 + 0.5;
            assert!(
                (ln_gamma(x) - value.ln()).abs() < 1e-13 * value.ln().abs().max(1.0),
                "x = {x}"
            );
            value *= x;
        }
    }

    #[test]
    fn small_arguments_use_reflection() {
        // Γ(1/3) and Γ(0.1), reference values to 17 digits
        assert!(rel(ln_gamma(1.0 / 3.0).exp(), 2.678_938_534_707_747_6) < 1e-13);
        assert!(rel(ln_gamma(0.1).exp(), 9.513_507_698_668_732) < 1e-13);
    }

    #[test]
    fn beta_examples() {
        assert!((beta_fn(1.0, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((beta_fn(1.0, 2.0).unwrap() - 0.5).abs() < 1e-14);
        assert!(rel(beta_fn(0.5, 0.5).unwrap(), PI) < 1e-13);
        assert!(rel(beta_fn(1.0, 1.5).unwrap(), 2.0 / 3.0) < 1e-13);
        assert!(beta_fn(0.0, 1.0).is_err());
        assert!(beta_fn(1.0, -2.0).is_err());
    }

    #[test]
    fn beta_symmetry_and_unit_argument() {
        for &x in &[0.25, 0.5, 1.0, 1.75, 3.0, 7.5] {
            assert!(rel(beta_fn(x, 1.0).unwrap(), 1.0 / x) < 1e-12);
            for &y in &[0.3, 1.2, 4.0] {
                assert_eq!(beta_fn(x, y).unwrap(), beta_fn(y, x).unwrap());
            }
        }
    }
}
