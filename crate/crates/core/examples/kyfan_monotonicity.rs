//! The averaged kernel behind the eigenvalue-sum bound: `S_n(μ)`, the sum of
//! its `n` largest eigenvalues, grows with `μ` up to the trace `Σ b` at
//! `μ = 1`. Also shows the two matrix inequalities used on the way: operator
//! convexity of `X ↦ (β - X)^{-1}` and Ky-Fan norm decrease under sign
//! averaging.
//!
//! ```bash
//! cargo run -p jacobi-lt --example kyfan_monotonicity
//! ```

use jacobi_lt::constructs::{
    kyfan_averaging_check, operator_convexity_gap, positive_sites, s_n_curve,
    sign_pattern_decomposition,
};
use jacobi_lt::eigen::{DenseSymmetric, EigenConfig};
use jacobi_lt::Perturbation;

pub fn main() {
    let p = Perturbation::new(-1, vec![0.3, 0.8, 0.0], -1, vec![0.7, 1.2, 0.0, 0.9]).unwrap();
    let d = sign_pattern_decomposition(&p).unwrap();
    let sites = positive_sites(&p).unwrap();
    let grid = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
    for n in 1..=sites.len() {
        let curve = s_n_curve(&d, &sites, n, &grid).unwrap();
        println!(
            "S_{n}: {:?}",
            curve.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>()
        );
        assert!(curve.windows(2).all(|w| w[0] <= w[1] + 1e-10));
    }

    let cfg = EigenConfig::default();
    let x1 = DenseSymmetric::from_rows(&[vec![0.2, 0.5], vec![0.5, -0.4]]).unwrap();
    let x2 = DenseSymmetric::from_rows(&[vec![-0.7, 0.1], vec![0.1, 0.9]]).unwrap();
    let gap = operator_convexity_gap(&x1, &x2, 2.0, 0.3, &cfg).unwrap();
    println!("operator convexity gap {gap:.3e} (>= 0)");
    assert!(gap >= -1e-12);

    let t = DenseSymmetric::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
    let conj = [(0.5, vec![1.0, 1.0]), (0.5, vec![1.0, -1.0])];
    for n in 1..=2 {
        let (averaged, original) = kyfan_averaging_check(&t, &conj, n, &cfg).unwrap();
        println!("Ky-Fan {n}-norm: averaged {averaged} <= original {original}");
        assert!(averaged <= original + 1e-12);
    }
}
