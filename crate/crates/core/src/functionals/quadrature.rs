//! Composite Gauss-Legendre rules, with a power substitution for integrands
//! carrying an algebraic endpoint factor `u^α`.

use std::num::NonZeroUsize;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// `n`-point rule.
    pub fn new(n: usize) -> Self {
        let n = NonZeroUsize::new(n).expect("rule needs at least one node");
        let (nodes, weights) = gauss_quad::legendre::GaussLegendre::new(n)
            .as_node_weight_pairs()
            .iter()
            .copied()
            .unzip();
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let s: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        s * half
    }

    /// Composite rule over `panels` equal panels.
    pub fn integrate_panels(
        &self,
        a: f64,
        b: f64,
        panels: usize,
        mut f: impl FnMut(f64) -> f64,
    ) -> f64 {
        let h = (b - a) / panels as f64;
        (0..panels)
            .map(|k| {
                let lo = a + h * k as f64;
                let hi = if k + 1 == panels { b } else { lo + h };
                self.integrate(lo, hi, &mut f)
            })
            .sum()
    }
}

/// Exponent `q` and integer power `k` of the substitution `u = v^q` that
/// turns `u^α du` into `q v^k dv`, i.e. `q = (k + 1)/(α + 1)`. `k` is the
/// smallest integer giving `q >= 2`, so `f(v^q)` stays smooth enough for
/// Gauss-Legendre at `v = 0`. For `-1 < α <= -1/2` this is `k = 0`.
pub fn power_substitution(alpha: f64) -> (f64, i32) {
    assert!(alpha > -1.0);
    let mut k = 0;
    loop {
        let q = (k as f64 + 1.0) / (alpha + 1.0);
        if q >= 2.0 {
            return (q, k);
        }
        k += 1;
    }
}

/// `∫_0^c f(u) u^α du` for `f` smooth on `[0, c]` and `α > -1`.
pub fn integrate_left_power(
    rule: &GaussLegendre,
    panels: usize,
    alpha: f64,
    c: f64,
    f: impl Fn(f64) -> f64,
) -> f64 {
    if c <= 0.0 {
        return 0.0;
    }
    let (q, k) = power_substitution(alpha);
    let v_max = c.powf(1.0 / q);
    rule.integrate_panels(0.0, v_max, panels, |v| q * v.powi(k) * f(v.powf(q).min(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_for_polynomials() {
        let rule = GaussLegendre::new(8);
        // degree 15 integrates exactly
        let got = rule.integrate(-1.0, 2.0, |x| x.powi(15) - 3.0 * x.powi(4));
        let want = (2f64.powi(16) - 1.0) / 16.0 - 3.0 * (32.0 + 1.0) / 5.0;
        assert!((got - want).abs() < 1e-10 * want.abs());
        let w: f64 = GaussLegendre::new(64).weights.iter().sum();
        assert!((w - 2.0).abs() < 1e-14);
    }

    #[test]
    fn odd_rule_has_zero_node() {
        let rule = GaussLegendre::new(5);
        assert!(rule.nodes[2].abs() < 1e-16);
        assert!((rule.weights[2] - 128.0 / 225.0).abs() < 1e-15);
    }

    #[test]
    fn substitution_exponents() {
        assert_eq!(power_substitution(-0.5), (2.0, 0));
        assert_eq!(power_substitution(-0.75), (4.0, 0));
        assert_eq!(power_substitution(0.0), (2.0, 1));
        assert_eq!(power_substitution(1.0), (2.0, 3));
    }

    #[test]
    fn algebraic_endpoint() {
        let rule = GaussLegendre::new(32);
        for &alpha in &[-0.9, -0.5, -0.25, 0.3, 1.7] {
            // ∫_0^2 u^α du
            let got = integrate_left_power(&rule, 4, alpha, 2.0, |_| 1.0);
            let want = 2f64.powf(alpha + 1.0) / (alpha + 1.0);
            assert!((got - want).abs() < 1e-13 * want, "alpha = {alpha}");
        }
    }
}
