//! Riesz means `∫_2^{|E|} √(t²-4) (|E|-t)^{γ-3/2} dt` of the discrete
//! spectrum against `B(γ-1/2, 2) Σ b̃^{γ+1/2}`, the two lower bounds for a
//! single mean, and the layer-cake Beta identity.
//!
//! ```bash
//! cargo run -p jacobi-lt --example riesz_means
//! ```

use jacobi_lt::eigen::{eigenvalues_outside, EigenConfig};
use jacobi_lt::functionals::{
    beta_fn, layer_cake_integral, remark_lower_bounds, riesz_lhs, riesz_mean, riesz_rhs,
    RieszConfig, Sign,
};
use jacobi_lt::Perturbation;

pub fn main() {
    // closed form at γ = 3/2: E√(E²-4)/2 - 2 ln((E + √(E²-4))/2)
    let cfg = RieszConfig::new(1.5);
    for e in [2.1, 2.5, 3.0, 5.0, 10.0] {
        let r = (e * e - 4.0f64).sqrt();
        let closed = 0.5 * e * r - 2.0 * ((e + r) / 2.0).ln();
        let quad = riesz_mean(e, &cfg).unwrap();
        println!("E = {e:5}: quadrature {quad:.15}  closed form {closed:.15}");
        assert!((quad - closed).abs() < 1e-9);
    }

    let p = Perturbation::new(0, vec![1.3], -1, vec![0.4, -0.9, 1.1]).unwrap();
    let s = eigenvalues_outside(&p, &EigenConfig::default()).unwrap();
    println!("E+ = {:?}, E- = {:?}", s.e_plus, s.e_minus);
    for gamma in [0.75, 1.0, 1.5, 2.5] {
        let cfg = RieszConfig::new(gamma);
        for sign in [Sign::Plus, Sign::Minus] {
            let lhs = riesz_lhs(&s, sign, &cfg).unwrap();
            let rhs = riesz_rhs(&p, gamma, sign).unwrap();
            println!("  gamma {gamma:4} {sign:?}: {lhs:.6} <= {rhs:.6}");
            assert!(lhs <= rhs);
        }
        for e in s.iter() {
            let mean = riesz_mean(e, &cfg).unwrap();
            let (first, second) = remark_lower_bounds(e, gamma).unwrap();
            assert!(first <= mean && second <= mean);
        }
    }

    for (c, gamma) in [(0.5, 0.75), (1.0, 1.5), (2.0, 2.5)] {
        let integral = layer_cake_integral(c, &RieszConfig::new(gamma)).unwrap();
        let beta = beta_fn(gamma - 0.5, 2.0).unwrap() * c.powf(gamma + 0.5);
        println!("c = {c}, gamma = {gamma}: layer cake {integral:.15} vs Beta {beta:.15}");
        assert!((integral - beta).abs() < 1e-8);
    }
}
