//! Randomised invariants of the operators, solvers and constructions.

use jacobi_lt::constructs::{
    averaged_l_mu, l_mu, l_mu_free_closed_form, positive_sites, resolvent_half_width, s_n_curve,
    sign_pattern_decomposition,
};
use jacobi_lt::eigen::{
    boundary_closed_eigenvalues, dense_eigen, dense_eigenvalues, eigenvalues_outside, kyfan,
    truncated_outside, DenseSymmetric, EigenConfig,
};
use jacobi_lt::harness::checks::{random_psd, random_symmetric};
use jacobi_lt::harness::model::RandomModel;
use jacobi_lt::harness::rng::SplitMix64;
use jacobi_lt::perturbation::{negate_b, sandwich, truncate};
use jacobi_lt::Perturbation;
use proptest::prelude::*;

fn cfg() -> EigenConfig {
    EigenConfig::default()
}

fn instance(seed: u64) -> Perturbation {
    RandomModel::new(seed).instance(0).unwrap()
}

fn constructs_instance(seed: u64) -> Perturbation {
    RandomModel::constructs(seed).instance(0).unwrap()
}

fn dense(p: &Perturbation, half_width: usize) -> DenseSymmetric {
    DenseSymmetric::from_tridiagonal(&truncate(p, half_width).unwrap())
}

fn min_eigenvalue(m: &DenseSymmetric) -> f64 {
    dense_eigenvalues(m, &cfg()).unwrap()[0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich_brackets_the_operator(seed in any::<u64>()) {
        let p = instance(seed);
        let s = sandwich(&p);
        let hw = p.support_radius() + 2;
        let j = dense(&p, hw);
        let below = j.combine(1.0, &dense(&s.minus, hw), -1.0);
        let above = dense(&s.plus, hw).combine(1.0, &j, -1.0);
        prop_assert!(min_eigenvalue(&below) >= -1e-12);
        prop_assert!(min_eigenvalue(&above) >= -1e-12);
    }

    #[test]
    fn elementary_two_by_two_blocks_are_psd(a in -3.0f64..3.0) {
        // the bond a between two sites, split off against (a-1)_+ on both
        // diagonals and the clipped bond min(a, 1)
        let d = (a - 1.0).max(0.0);
        let off = a - a.min(1.0);
        let block = DenseSymmetric::from_rows(&[vec![d, -off], vec![-off, d]]).unwrap();
        prop_assert!(min_eigenvalue(&block) >= -1e-14);
    }

    #[test]
    fn flipping_b_mirrors_the_spectrum(seed in any::<u64>()) {
        let p = instance(seed);
        let Ok(s) = eigenvalues_outside(&p, &cfg()) else { return Ok(()) };
        let Ok(m) = eigenvalues_outside(&negate_b(&p), &cfg()) else { return Ok(()) };
        prop_assert_eq!(s.e_plus.len(), m.e_minus.len());
        prop_assert_eq!(s.e_minus.len(), m.e_plus.len());
        for (x, y) in s.e_plus.iter().zip(&m.e_minus) {
            prop_assert!((x + y).abs() < 1e-9);
        }
        for (x, y) in s.e_minus.iter().zip(&m.e_plus) {
            prop_assert!((x + y).abs() < 1e-9);
        }
    }

    #[test]
    fn finite_sections_increase_towards_the_limit(seed in any::<u64>()) {
        // eigenvalues of nested sections interlace, so the j-th largest can
        // only grow with the section
        let p = instance(seed);
        let r = p.support_radius();
        let (small_plus, small_minus) = truncated_outside(&truncate(&p, r + 4).unwrap(), 1e-7);
        let (big_plus, big_minus) = truncated_outside(&truncate(&p, 2 * r + 40).unwrap(), 1e-7);
        prop_assert!(small_plus.len() <= big_plus.len());
        prop_assert!(small_minus.len() <= big_minus.len());
        for (s, b) in small_plus.iter().zip(&big_plus) {
            prop_assert!(*s <= *b + 1e-12);
        }
        for (s, b) in small_minus.iter().zip(&big_minus) {
            prop_assert!(*s >= *b - 1e-12);
        }
    }

    #[test]
    fn adaptive_spectrum_matches_boundary_closed_bisection(seed in any::<u64>()) {
        let p = instance(seed);
        let Ok(s) = eigenvalues_outside(&p, &cfg()) else { return Ok(()) };
        let (plus, minus) = boundary_closed_eigenvalues(&p, 1e-7);
        prop_assert_eq!(s.e_plus.len(), plus.len());
        prop_assert_eq!(s.e_minus.len(), minus.len());
        for (x, y) in s.iter().zip(plus.iter().chain(&minus)) {
            prop_assert!((x - y).abs() < 1e-9, "{} vs {}", x, y);
        }
    }

    #[test]
    fn dense_eigen_reconstructs(seed in any::<u64>(), dim in 1usize..10) {
        let m = random_symmetric(&mut SplitMix64::new(seed), dim);
        let eig = dense_eigen(&m, &cfg()).unwrap();
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        // the sweeps stop once the off-diagonal part is below 1e-12 of the norm
        let tol = 1e-11 * m.frobenius_norm().max(1.0);
        let err = eig.apply(|x| x).max_abs_diff(&m);
        prop_assert!(err < tol, "reconstruction error {}", err);
        prop_assert!(eig.apply(|_| 1.0).max_abs_diff(&DenseSymmetric::identity(dim)) < 1e-12);
        prop_assert!((eig.values.iter().sum::<f64>() - m.trace()).abs() < 1e-12);
    }

    #[test]
    fn kyfan_is_a_norm(seed in any::<u64>(), dim in 1usize..8) {
        let mut rng = SplitMix64::new(seed);
        let a = random_symmetric(&mut rng, dim);
        let b = random_symmetric(&mut rng, dim);
        let sum = a.combine(1.0, &b, 1.0);
        for n in 1..=dim {
            let lhs = kyfan(&sum, n, &cfg()).unwrap();
            let rhs = kyfan(&a, n, &cfg()).unwrap() + kyfan(&b, n, &cfg()).unwrap();
            prop_assert!(lhs <= rhs + 1e-10);
            prop_assert!((kyfan(&a.scaled(-2.5), n, &cfg()).unwrap() - 2.5 * kyfan(&a, n, &cfg()).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn averaging_multiplies_by_bond_products(seed in any::<u64>(), mu in 0.05f64..1.0) {
        // entry (m, n) of the averaged kernel is b_m^{1/2} μ^{|m-n|} b_n^{1/2}
        // times the product of κ over the bonds between m and n
        let p = constructs_instance(seed);
        let sites = positive_sites(&p).unwrap();
        let d = sign_pattern_decomposition(&p).unwrap();
        let avg = averaged_l_mu(&d, &sites, mu).unwrap();
        for (i, &(m, bm)) in sites.iter().enumerate() {
            for (j, &(n, bn)) in sites.iter().enumerate() {
                let (lo, hi) = (m.min(n), m.max(n));
                let kappa: f64 = (lo..hi).map(|k| p.a_at(k)).product();
                let want = (bm * bn).sqrt() * mu.powi((hi - lo) as i32) * kappa;
                prop_assert!((avg[(i, j)] - want).abs() < 1e-12);
            }
        }
        let trace: f64 = sites.iter().map(|&(_, b)| b).sum();
        prop_assert!((avg.trace() - trace).abs() < 1e-12);
    }

    #[test]
    fn kernel_is_dominated_by_its_average(seed in any::<u64>(), mu in 0.1f64..0.9) {
        let p = constructs_instance(seed);
        let sites = positive_sites(&p).unwrap();
        let d = sign_pattern_decomposition(&p).unwrap();
        let actual = dense_eigenvalues(&l_mu(&p, mu, resolvent_half_width(&p, mu)).unwrap(), &cfg()).unwrap();
        let averaged = dense_eigenvalues(&averaged_l_mu(&d, &sites, mu).unwrap(), &cfg()).unwrap();
        for (x, y) in actual.iter().zip(&averaged) {
            prop_assert!(*x <= *y + 1e-8);
        }
    }

    #[test]
    fn resolvent_kernel_matches_closed_form(seed in any::<u64>(), mu in 0.1f64..0.9) {
        let p = constructs_instance(seed);
        let free = Perturbation::potential(p.b_offset(), p.b().to_vec()).unwrap();
        let sites = positive_sites(&free).unwrap();
        let resolvent = l_mu(&free, mu, resolvent_half_width(&free, mu)).unwrap();
        prop_assert!(resolvent.max_abs_diff(&l_mu_free_closed_form(&sites, mu).unwrap()) < 1e-8);
    }

    #[test]
    fn s_n_is_even_under_bond_sign_flip(seed in any::<u64>()) {
        let p = constructs_instance(seed);
        let sites = positive_sites(&p).unwrap();
        let d = sign_pattern_decomposition(&p).unwrap();
        let grid = [0.2, 0.5, 0.9, 1.0];
        for n in 1..=sites.len() {
            let a = s_n_curve(&d, &sites, n, &grid).unwrap();
            let b = s_n_curve(&d.negated(), &sites, n, &grid).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn psd_generator_is_psd(seed in any::<u64>(), dim in 1usize..8) {
        let t = random_psd(&mut SplitMix64::new(seed), dim);
        prop_assert!(min_eigenvalue(&t) >= -1e-12);
    }

    #[test]
    fn instance_files_round_trip(seed in any::<u64>()) {
        let p = instance(seed);
        let text = p.to_json_string();
        let back = Perturbation::from_json_str(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_json_string(), text);
    }

    #[test]
    fn random_instances_are_reproducible(seed in any::<u64>(), index in 0u64..1000) {
        let model = RandomModel::new(seed);
        prop_assert_eq!(model.instance(index).unwrap(), model.instance(index).unwrap());
    }
}
