//! Birman-Schwinger principle: at each eigenvalue `E_j > 2` the `j`-th
//! largest eigenvalue of `K(A; E_j) = B^{1/2} (E_j - A)^{-1} B^{1/2}` is one.
//! Also compares the resolvent route to `L_μ` with its closed form.
//!
//! ```bash
//! cargo run -p jacobi-lt --example birman_schwinger
//! ```

use jacobi_lt::constructs::{
    birman_schwinger, l_mu, l_mu_free_closed_form, positive_sites, resolvent_half_width,
};
use jacobi_lt::eigen::{dense_eigenvalues, eigenvalues_outside, EigenConfig};
use jacobi_lt::functionals::mu_of_e;
use jacobi_lt::Perturbation;

pub fn main() {
    let cfg = EigenConfig::default();
    let p = Perturbation::new(0, vec![0.6, 0.9], -1, vec![1.2, 0.0, 0.8, 1.5]).unwrap();
    let s = eigenvalues_outside(&p, &cfg).unwrap();
    println!("E+ = {:?}", s.e_plus);
    for (j, &e) in s.e_plus.iter().enumerate() {
        let mu = mu_of_e(e).unwrap().mu;
        let k = birman_schwinger(&p, e, resolvent_half_width(&p, mu)).unwrap();
        let mut values = dense_eigenvalues(&k, &cfg).unwrap();
        values.reverse();
        println!("  K(A; E_{}) eigenvalues {:?}", j + 1, values);
        assert!((values[j] - 1.0).abs() < 1e-6);
    }

    let free = Perturbation::potential(-1, vec![1.2, 0.0, 0.8, 1.5]).unwrap();
    let sites = positive_sites(&free).unwrap();
    for mu in [0.2, 0.5, 0.8] {
        let resolvent = l_mu(&free, mu, resolvent_half_width(&free, mu)).unwrap();
        let closed = l_mu_free_closed_form(&sites, mu).unwrap();
        println!(
            "  mu = {mu}: |L_mu - closed form|_max = {:.2e}",
            resolvent.max_abs_diff(&closed)
        );
        assert!(resolvent.max_abs_diff(&closed) < 1e-8);
    }
}
